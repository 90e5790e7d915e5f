#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hochglue/algebra.hpp"
#include "hochglue/linalg.hpp"

namespace hochglue {

enum class PairKind { vertex, arrow, relation };

//! left || right with left a vertex, an arrow or a relation and right a parallel basis path.
struct ParallelPair {
  Path left;
  Path right;
  auto operator<=>(const ParallelPair&) const = default;
  bool operator==(const ParallelPair&) const = default;
};

class PairSpace {
 public:
  static PairSpace vertices(const MonomialAlgebra& a);
  static PairSpace arrows(const MonomialAlgebra& a);
  static PairSpace relations(const MonomialAlgebra& a);

  [[nodiscard]] PairKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }
  [[nodiscard]] const ParallelPair& at(Index i) const { return pairs_.at(i); }
  [[nodiscard]] const std::vector<ParallelPair>& pairs() const noexcept { return pairs_; }
  [[nodiscard]] std::optional<Index> index(const ParallelPair& p) const;
  //! Throws Error if the pair is not in the space.
  [[nodiscard]] Index require(const ParallelPair& p) const;
  //! length(right) - length(left)
  [[nodiscard]] long grade(Index i) const;

 private:
  PairSpace(PairKind kind, std::vector<ParallelPair> pairs);

  PairKind kind_;
  std::vector<ParallelPair> pairs_;
  std::map<ParallelPair, Index> index_;
};

std::string format_pair(const Quiver& q, const ParallelPair& p);
//! e.g. "(gamma*||gamma*) - (eta||eta)"; "0" for the zero vector.
std::string format_vector(const Quiver& q, const PairSpace& space, const SparseVector& v);
std::string format_subspace(const Quiver& q, const PairSpace& space, const Subspace& s);

//! Formal sum of basis paths obtained by replacing single occurrences of `a` in `p` by `gamma`.
std::map<Path, long> substitute(const MonomialAlgebra& a, const Path& p, ArrowId arrow, const Path& gamma);

struct LieAlgebraPresentation {
  std::vector<SparseVector> basis;
  //! constants[i][j][k]: [x_i, x_j] = sum_k constants[i][j][k] x_k
  std::vector<std::vector<std::vector<Scalar>>> constants;
  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

//! Structure of kernel/ideal for an alternating bracket on the ambient space; representatives are
//! complement(kernel, ideal). Throws ContainmentError if brackets leave the kernel.
LieAlgebraPresentation quotient_lie(const Subspace& kernel, const Subspace& ideal,
                                    const std::function<SparseVector(const SparseVector&, const SparseVector&)>& bracket);
//! Coordinates of x in kernel/ideal with respect to the representatives.
std::vector<Scalar> quotient_coordinates(const Subspace& ideal, const Subspace& representatives,
                                         const SparseVector& x);
[[nodiscard]] bool satisfies_jacobi(const Field& f, const LieAlgebraPresentation& lie);
[[nodiscard]] bool is_alternating(const LieAlgebraPresentation& lie);
//! Dimension of the center of a Lie algebra given by structure constants.
std::size_t lie_center_dim(const Field& f, const LieAlgebraPresentation& lie);

struct CenterTable {
  std::vector<SparseVector> basis;  // rows of Ker delta0 in k(Q0||B)
  std::vector<std::vector<std::vector<Scalar>>> product;
  std::vector<Scalar> unit;
};

class StrametzComplex {
 public:
  explicit StrametzComplex(MonomialAlgebra a);

  [[nodiscard]] const MonomialAlgebra& algebra() const noexcept { return algebra_; }
  [[nodiscard]] const Field& field() const noexcept { return algebra_.field(); }
  [[nodiscard]] const PairSpace& q0() const noexcept { return q0_; }
  [[nodiscard]] const PairSpace& q1() const noexcept { return q1_; }
  [[nodiscard]] const PairSpace& z() const noexcept { return z_; }
  [[nodiscard]] const LinearMap& delta0() const noexcept { return delta0_; }
  [[nodiscard]] const LinearMap& delta1() const noexcept { return delta1_; }

  [[nodiscard]] const Subspace& hh0() const noexcept { return ker_delta0_; }
  [[nodiscard]] const Subspace& im_delta0() const noexcept { return im_delta0_; }
  [[nodiscard]] const Subspace& ker_delta1() const noexcept { return ker_delta1_; }
  //! Deterministic complement of Im delta0 inside Ker delta1.
  [[nodiscard]] const Subspace& hh1_representatives() const noexcept { return hh1_reps_; }
  [[nodiscard]] std::size_t hh1_dim() const noexcept { return hh1_reps_.dim(); }

  //! Span of e||e (degree 0) and of e||p with length p >= 1.
  [[nodiscard]] Subspace q0_trivial_part() const;
  [[nodiscard]] Subspace q0_positive_part() const;
  [[nodiscard]] Subspace ker_delta0_positive() const { return delta0_.kernel_on(q0_positive_part()); }
  [[nodiscard]] Subspace im_delta0_positive() const { return delta0_.apply(q0_positive_part()); }

  [[nodiscard]] SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  [[nodiscard]] LieAlgebraPresentation hh1_lie() const;
  [[nodiscard]] CenterTable center_product() const;

  //! k(Q0||B) vector  ->  element of A on the path basis.
  [[nodiscard]] SparseVector center_to_algebra(const SparseVector& z) const;
  //! Inverse of center_to_algebra on cycles; throws Error on non-cycles.
  [[nodiscard]] SparseVector algebra_to_center(const SparseVector& x) const;
  //! Product in A of two elements given on the path basis.
  [[nodiscard]] SparseVector multiply(const SparseVector& x, const SparseVector& y) const;

 private:
  SparseVector bracket_pairs(Index i, Index j) const;

  MonomialAlgebra algebra_;
  PairSpace q0_;
  PairSpace q1_;
  PairSpace z_;
  LinearMap delta0_;
  LinearMap delta1_;
  Subspace ker_delta0_;
  Subspace im_delta0_;
  Subspace ker_delta1_;
  Subspace hh1_reps_;
};

}  // namespace hochglue
