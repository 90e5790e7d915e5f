#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hochglue/field.hpp"
#include "hochglue/quiver.hpp"

namespace hochglue {

struct BuildOptions {
  //! Drop relations containing another relation instead of rejecting them.
  bool drop_superset_relations = false;
  std::size_t max_basis_size = 200000;
};

//! A = kQ/<Z> for a minimal set Z of paths of length >= 2, with finite path basis.
class MonomialAlgebra {
 public:
  //! Throws AdmissibilityError, MinimalityError or DimensionError.
  static MonomialAlgebra build(Quiver quiver, std::vector<Path> relations, Field field,
                               BuildOptions options = {});

  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  //! Z in canonical order.
  [[nodiscard]] const std::vector<Path>& relations() const noexcept { return relations_; }
  [[nodiscard]] const Field& field() const noexcept { return field_; }
  //! Basis paths in canonical order.
  [[nodiscard]] const std::vector<Path>& basis() const noexcept { return basis_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] std::optional<std::size_t> basis_index(const Path& p) const;
  [[nodiscard]] std::size_t max_relation_length() const noexcept;

  [[nodiscard]] bool in_ideal(const Path& p) const;
  //! later·earlier, or nullopt for zero (not composable or in the ideal).
  [[nodiscard]] std::optional<Path> multiply(const Path& later, const Path& earlier) const;
  [[nodiscard]] bool is_radical_square_zero() const;
  //! Basis paths of length >= 1 from vertex j to vertex i.
  [[nodiscard]] std::vector<Path> path_set(VertexId i, VertexId j) const;
  [[nodiscard]] bool is_node_arrow(ArrowId gamma) const;

  //! Same algebra over another field.
  [[nodiscard]] MonomialAlgebra with_field(Field f) const;

  bool operator==(const MonomialAlgebra& other) const {
    return quiver_ == other.quiver_ && relations_ == other.relations_ && field_ == other.field_;
  }

 private:
  MonomialAlgebra(Quiver q, std::vector<Path> z, Field f)
      : quiver_(std::move(q)), relations_(std::move(z)), field_(f) {}
  void enumerate_basis(std::size_t cap);

  Quiver quiver_;
  std::vector<Path> relations_;
  Field field_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
};

}  // namespace hochglue
