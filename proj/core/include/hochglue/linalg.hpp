#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hochglue/field.hpp"

namespace hochglue {

using Index = std::size_t;

//! Sparse vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;
  //! Entries may be unsorted and repeated; they are summed and normalized.
  SparseVector(const Field& f, std::vector<std::pair<Index, Scalar>> entries);
  static SparseVector unit(Index i) { return SparseVector::from_sorted({{i, Scalar(1)}}); }

  [[nodiscard]] const std::vector<std::pair<Index, Scalar>>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool is_zero() const noexcept { return entries_.empty(); }
  [[nodiscard]] Scalar coefficient(Index i) const;
  [[nodiscard]] Index leading_index() const { return entries_.front().first; }
  [[nodiscard]] Index max_index() const { return entries_.back().first; }

  //! this += c * other
  void add_scaled(const Field& f, const SparseVector& other, const Scalar& c);
  void scale(const Field& f, const Scalar& c);
  [[nodiscard]] SparseVector scaled(const Field& f, const Scalar& c) const;
  [[nodiscard]] SparseVector plus(const Field& f, const SparseVector& other) const;
  [[nodiscard]] SparseVector minus(const Field& f, const SparseVector& other) const;
  //! Moves every index by `offset`.
  [[nodiscard]] SparseVector shifted(Index offset) const;

  bool operator==(const SparseVector&) const = default;

 private:
  static SparseVector from_sorted(std::vector<std::pair<Index, Scalar>> entries);
  std::vector<std::pair<Index, Scalar>> entries_;
};

//! A subspace of F^n kept in reduced row-echelon form. Equal spans give identical rows.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient_dim);
  static Subspace span(const Field& f, std::size_t ambient_dim, const std::vector<SparseVector>& generators);
  static Subspace whole(const Field& f, std::size_t ambient_dim);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<SparseVector>& rows() const noexcept { return rows_; }
  [[nodiscard]] std::vector<Index> pivots() const;

  //! Returns true if the span grew.
  bool insert(SparseVector v);
  //! v minus its projection along the pivot columns; zero iff v is a member.
  [[nodiscard]] SparseVector reduce(const SparseVector& v) const;
  [[nodiscard]] bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
  [[nodiscard]] bool contains(const Subspace& other) const;
  //! Coefficients of a member v in terms of rows(); v must lie in the subspace.
  [[nodiscard]] std::vector<Scalar> coordinates(const SparseVector& v) const;

  bool operator==(const Subspace& other) const {
    return field_ == other.field_ && ambient_ == other.ambient_ && rows_ == other.rows_;
  }

 private:
  void check_index(const SparseVector& v) const;

  Field field_;
  std::size_t ambient_;
  std::vector<SparseVector> rows_;  // sorted by pivot
  std::vector<std::size_t> row_of_pivot_;  // ambient_-sized, npos when not a pivot
};

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);
//! dim t - dim s; throws ContainmentError unless s is contained in t.
std::size_t quotient_dim(const Subspace& s, const Subspace& t);
[[nodiscard]] bool is_direct_sum(const Subspace& s, const Subspace& t);
//! Deterministic complement of `inner` inside `outer` (rows of outer reduced modulo inner).
Subspace complement(const Subspace& outer, const Subspace& inner);

//! A linear map F^domain -> F^codomain stored by the images of the unit vectors.
class LinearMap {
 public:
  LinearMap(Field f, std::size_t domain_dim, std::size_t codomain_dim);
  LinearMap(Field f, std::size_t domain_dim, std::size_t codomain_dim, std::vector<SparseVector> columns);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t domain_dim() const noexcept { return domain_; }
  [[nodiscard]] std::size_t codomain_dim() const noexcept { return codomain_; }
  [[nodiscard]] const std::vector<SparseVector>& columns() const noexcept { return columns_; }
  void set_column(Index j, SparseVector image);

  [[nodiscard]] SparseVector apply(const SparseVector& v) const;
  [[nodiscard]] Subspace apply(const Subspace& s) const;
  [[nodiscard]] Subspace kernel() const;
  [[nodiscard]] Subspace image() const;
  //! Kernel of the restriction to s, as a subspace of the domain.
  [[nodiscard]] Subspace kernel_on(const Subspace& s) const;
  //! Rank of the map (dim image).
  [[nodiscard]] std::size_t rank() const { return image().dim(); }

 private:
  Field field_;
  std::size_t domain_;
  std::size_t codomain_;
  std::vector<SparseVector> columns_;
};

//! this ∘ other: throws ShapeError on mismatched dimensions.
LinearMap compose(const LinearMap& after, const LinearMap& before);

}  // namespace hochglue
