#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochglue/algebra.hpp"
#include "hochglue/linalg.hpp"
#include "hochglue/strametz.hpp"

namespace hochglue {

//! Result of identifying alpha: e1 -> e2 with beta: e_{n-1} -> e_n.
//! Q_B keeps the vertex order of Q_A with e_{n-1}, e_n removed (f1 sits where e1 was,
//! f2 where e2 was) and the arrow order with beta removed (the glued arrow takes alpha's slot).
class GluedAlgebra {
 public:
  [[nodiscard]] const MonomialAlgebra& a() const noexcept { return a_; }
  [[nodiscard]] const MonomialAlgebra& b() const noexcept { return b_; }
  [[nodiscard]] ArrowId alpha() const noexcept { return alpha_; }
  [[nodiscard]] ArrowId beta() const noexcept { return beta_; }
  [[nodiscard]] ArrowId glued_arrow() const noexcept { return gamma_; }
  //! e1, e2, e_{n-1}, e_n in Q_A.
  [[nodiscard]] VertexId e1() const noexcept { return a_.quiver().source(alpha_); }
  [[nodiscard]] VertexId e2() const noexcept { return a_.quiver().target(alpha_); }
  [[nodiscard]] VertexId en1() const noexcept { return a_.quiver().source(beta_); }
  [[nodiscard]] VertexId en() const noexcept { return a_.quiver().target(beta_); }
  [[nodiscard]] VertexId f1() const { return vertex_map(e1()); }
  [[nodiscard]] VertexId f2() const { return vertex_map(e2()); }

  [[nodiscard]] VertexId vertex_map(VertexId v) const { return vertex_map_.at(v.value); }
  [[nodiscard]] ArrowId arrow_map(ArrowId a) const { return arrow_map_.at(a.value); }
  //! The image p* of a path of Q_A.
  [[nodiscard]] Path path_map(const Path& p) const;
  //! All paths of Q_A whose image is p (the fiber of the path map over kQ_A paths).
  [[nodiscard]] std::vector<Path> preimages(const Path& p) const;

  //! Z_new as enumerated from the two families, canonical order, before minimalization.
  [[nodiscard]] const std::vector<Path>& z_new() const noexcept { return z_new_; }

  friend GluedAlgebra glue(const MonomialAlgebra& a, ArrowId alpha, ArrowId beta, const std::string& name);

 private:
  GluedAlgebra(MonomialAlgebra a, MonomialAlgebra b) : a_(std::move(a)), b_(std::move(b)) {}

  MonomialAlgebra a_;
  MonomialAlgebra b_;
  ArrowId alpha_;
  ArrowId beta_;
  ArrowId gamma_;
  std::vector<VertexId> vertex_map_;
  std::vector<ArrowId> arrow_map_;
  std::vector<Path> z_new_;
};

//! Throws GluingError for alpha == beta, loops, or shared endpoints.
GluedAlgebra glue(const MonomialAlgebra& a, ArrowId alpha, ArrowId beta, const std::string& name = "gamma*");
//! Looks arrows up by name; throws GluingError for unknown names.
GluedAlgebra glue(const MonomialAlgebra& a, const std::string& alpha, const std::string& beta,
                  const std::string& name = "gamma*");

struct GluingKind {
  bool source_sink = false;
  bool same_block = false;
  bool operator==(const GluingKind&) const = default;
};
GluingKind gluing_kind(const GluedAlgebra& g);

struct SpecialPaths {
  std::vector<Path> between_1_n1;  // Sp(1,n-1), paths of Q_A
  std::vector<Path> between_2_n;   // Sp(2,n)
  Subspace z_sp;                   // inside k((Q_B)_1||B_B)
  std::size_t sp;
};

struct CrucialPaths {
  bool applicable = false;  // source-sink gluing only
  std::vector<Path> paths;  // Cp(2,n-1)
  std::size_t cp = 0;
};

struct SpecialPair {
  ArrowId arrow;
  Path path;
  bool operator==(const SpecialPair&) const = default;
};

struct SpecialPairs {
  std::vector<SpecialPair> pairs;  // in Q_A
  Subspace span;                   // <Spp> in k((Q_B)_1||B_B)
  Subspace z_spp;
  std::size_t kspp;
};

struct NonSpecialPaths {
  std::vector<Path> paths;  // NSp, paths of Q_A
  Subspace span;            // in k((Q_B)_0||B_B)
  Subspace z_nsp;
  std::size_t nsp;
};

struct AssumptionCheck {
  bool holds = true;
  //! First loop a with a^m in Z_A and char | m.
  std::optional<std::pair<ArrowId, std::size_t>> witness;
};

//! A gluing together with both Strametz complexes and the comparison maps.
class GluingAnalysis {
 public:
  explicit GluingAnalysis(GluedAlgebra g);

  [[nodiscard]] const GluedAlgebra& gluing() const noexcept { return g_; }
  [[nodiscard]] const StrametzComplex& complex_a() const noexcept { return ca_; }
  [[nodiscard]] const StrametzComplex& complex_b() const noexcept { return cb_; }
  [[nodiscard]] GluingKind kind() const noexcept { return kind_; }

  [[nodiscard]] const LinearMap& psi0() const noexcept { return psi0_; }
  [[nodiscard]] const LinearMap& psi1() const noexcept { return psi1_; }
  [[nodiscard]] const LinearMap& psi2() const noexcept { return psi2_; }

  [[nodiscard]] SpecialPaths special_paths() const;
  [[nodiscard]] CrucialPaths crucial_paths() const;
  [[nodiscard]] SpecialPairs special_pairs() const;
  [[nodiscard]] NonSpecialPaths nsp_data() const;
  [[nodiscard]] AssumptionCheck assumption() const;

  //! gamma*||gamma* in k((Q_B)_1||B_B)
  [[nodiscard]] SparseVector gamma_pair() const;
  //! alpha||alpha - beta||beta in k((Q_A)_1||B_A)
  [[nodiscard]] SparseVector alpha_minus_beta() const;

 private:
  [[nodiscard]] bool near_glued(VertexId v) const;

  GluedAlgebra g_;
  StrametzComplex ca_;
  StrametzComplex cb_;
  GluingKind kind_;
  LinearMap psi0_;
  LinearMap psi1_;
  LinearMap psi2_;
};

}  // namespace hochglue
