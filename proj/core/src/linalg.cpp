#include "hochglue/linalg.hpp"

#include <algorithm>

#include "hochglue/errors.hpp"

namespace hochglue {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}

SparseVector::SparseVector(const Field& f, std::vector<std::pair<Index, Scalar>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [i, c] : entries) {
    Scalar v = f.normalize(c);
    if (!entries_.empty() && entries_.back().first == i) {
      entries_.back().second = f.add(entries_.back().second, v);
    } else {
      entries_.emplace_back(i, std::move(v));
    }
  }
  std::erase_if(entries_, [](const auto& e) { return Field::is_zero(e.second); });
}

SparseVector SparseVector::from_sorted(std::vector<std::pair<Index, Scalar>> entries) {
  SparseVector v;
  v.entries_ = std::move(entries);
  return v;
}

Scalar SparseVector::coefficient(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const auto& e, Index k) { return e.first < k; });
  if (it == entries_.end() || it->first != i) return Scalar(0);
  return it->second;
}

void SparseVector::add_scaled(const Field& f, const SparseVector& other, const Scalar& c) {
  if (Field::is_zero(c) || other.is_zero()) return;
  std::vector<std::pair<Index, Scalar>> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, f.mul(c, b->second));
      ++b;
    } else {
      Scalar v = f.add(a->second, f.mul(c, b->second));
      if (!Field::is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::scale(const Field& f, const Scalar& c) {
  if (Field::is_zero(c)) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second = f.mul(e.second, c);
}

SparseVector SparseVector::scaled(const Field& f, const Scalar& c) const {
  SparseVector v = *this;
  v.scale(f, c);
  return v;
}

SparseVector SparseVector::plus(const Field& f, const SparseVector& other) const {
  SparseVector v = *this;
  v.add_scaled(f, other, Scalar(1));
  return v;
}

SparseVector SparseVector::minus(const Field& f, const SparseVector& other) const {
  SparseVector v = *this;
  v.add_scaled(f, other, f.from_int(-1));
  return v;
}

SparseVector SparseVector::shifted(Index offset) const {
  SparseVector v = *this;
  for (auto& e : v.entries_) e.first += offset;
  return v;
}

Subspace::Subspace(Field f, std::size_t ambient_dim)
    : field_(f), ambient_(ambient_dim), row_of_pivot_(ambient_dim, npos) {}

Subspace Subspace::span(const Field& f, std::size_t ambient_dim, const std::vector<SparseVector>& generators) {
  Subspace s(f, ambient_dim);
  for (const auto& g : generators) s.insert(g);
  return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient_dim) {
  Subspace s(f, ambient_dim);
  for (Index i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(SparseVector::unit(i));
    s.row_of_pivot_[i] = i;
  }
  return s;
}

std::vector<Index> Subspace::pivots() const {
  std::vector<Index> out;
  for (const auto& r : rows_) out.push_back(r.leading_index());
  return out;
}

void Subspace::check_index(const SparseVector& v) const {
  if (!v.is_zero() && v.max_index() >= ambient_) {
    throw ShapeError("vector index " + std::to_string(v.max_index()) + " outside ambient dimension " +
                     std::to_string(ambient_));
  }
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  check_index(v);
  SparseVector out = v;
  // Rows have zeros at all other pivots, so the pivot coefficients of v are final.
  for (const auto& [i, c] : v.entries()) {
    std::size_t r = row_of_pivot_[i];
    if (r != npos) out.add_scaled(field_, rows_[r], field_.neg(c));
  }
  return out;
}

bool Subspace::insert(SparseVector v) {
  SparseVector w = reduce(v);
  if (w.is_zero()) return false;
  w.scale(field_, field_.inv(w.entries().front().second));
  Index p = w.leading_index();
  for (auto& r : rows_) {
    Scalar c = r.coefficient(p);
    if (!Field::is_zero(c)) r.add_scaled(field_, w, field_.neg(c));
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const SparseVector& r, Index k) { return r.leading_index() < k; });
  rows_.insert(pos, std::move(w));
  for (std::size_t i = 0; i < rows_.size(); ++i) row_of_pivot_[rows_[i].leading_index()] = i;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const SparseVector& r) { return contains(r); });
}

std::vector<Scalar> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw ContainmentError("vector is not a member of the subspace");
  std::vector<Scalar> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(v.coefficient(r.leading_index()));
  return out;
}

namespace {
void check_compatible(const Subspace& s, const Subspace& t) {
  if (!(s.field() == t.field()) || s.ambient_dim() != t.ambient_dim()) {
    throw ShapeError("subspaces live in different ambient spaces");
  }
}
}  // namespace

Subspace sum(const Subspace& s, const Subspace& t) {
  check_compatible(s, t);
  Subspace out = s;
  for (const auto& r : t.rows()) out.insert(r);
  return out;
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  check_compatible(s, t);
  // Zassenhaus: rows (s|s) and (t|0); rows with zero left half span the intersection.
  const std::size_t n = s.ambient_dim();
  const Field& f = s.field();
  Subspace big(f, 2 * n);
  for (const auto& r : s.rows()) big.insert(r.plus(f, r.shifted(n)));
  for (const auto& r : t.rows()) big.insert(r);
  Subspace out(f, n);
  for (const auto& r : big.rows()) {
    if (r.leading_index() < n) continue;
    std::vector<std::pair<Index, Scalar>> e;
    for (const auto& [i, c] : r.entries()) e.emplace_back(i - n, c);
    out.insert(SparseVector(f, std::move(e)));
  }
  return out;
}

std::size_t quotient_dim(const Subspace& s, const Subspace& t) {
  check_compatible(s, t);
  if (!t.contains(s)) throw ContainmentError("quotient of non-contained subspaces");
  return t.dim() - s.dim();
}

bool is_direct_sum(const Subspace& s, const Subspace& t) {
  return s.dim() + t.dim() == sum(s, t).dim();
}

Subspace complement(const Subspace& outer, const Subspace& inner) {
  check_compatible(outer, inner);
  Subspace out(outer.field(), outer.ambient_dim());
  for (const auto& r : outer.rows()) out.insert(inner.reduce(r));
  return out;
}

LinearMap::LinearMap(Field f, std::size_t domain_dim, std::size_t codomain_dim)
    : field_(f), domain_(domain_dim), codomain_(codomain_dim), columns_(domain_dim) {}

LinearMap::LinearMap(Field f, std::size_t domain_dim, std::size_t codomain_dim, std::vector<SparseVector> columns)
    : field_(f), domain_(domain_dim), codomain_(codomain_dim), columns_(std::move(columns)) {
  if (columns_.size() != domain_) throw ShapeError("column count differs from domain dimension");
  for (const auto& c : columns_) {
    if (!c.is_zero() && c.max_index() >= codomain_) throw ShapeError("column entry outside codomain");
  }
}

void LinearMap::set_column(Index j, SparseVector image) {
  if (j >= domain_) throw ShapeError("column index outside domain");
  if (!image.is_zero() && image.max_index() >= codomain_) throw ShapeError("column entry outside codomain");
  columns_[j] = std::move(image);
}

SparseVector LinearMap::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, c] : v.entries()) {
    if (j >= domain_) throw ShapeError("vector entry outside domain");
    out.add_scaled(field_, columns_[j], c);
  }
  return out;
}

Subspace LinearMap::apply(const Subspace& s) const {
  if (s.ambient_dim() != domain_) throw ShapeError("subspace does not live in the domain");
  Subspace out(field_, codomain_);
  for (const auto& r : s.rows()) out.insert(apply(r));
  return out;
}

Subspace LinearMap::kernel_on(const Subspace& s) const {
  if (s.ambient_dim() != domain_) throw ShapeError("subspace does not live in the domain");
  Subspace big(field_, codomain_ + domain_);
  for (const auto& r : s.rows()) big.insert(apply(r).plus(field_, r.shifted(codomain_)));
  Subspace out(field_, domain_);
  for (const auto& r : big.rows()) {
    if (r.leading_index() < codomain_) continue;
    std::vector<std::pair<Index, Scalar>> e;
    for (const auto& [i, c] : r.entries()) e.emplace_back(i - codomain_, c);
    out.insert(SparseVector(field_, std::move(e)));
  }
  return out;
}

Subspace LinearMap::kernel() const { return kernel_on(Subspace::whole(field_, domain_)); }

Subspace LinearMap::image() const {
  Subspace out(field_, codomain_);
  for (const auto& c : columns_) out.insert(c);
  return out;
}

LinearMap compose(const LinearMap& after, const LinearMap& before) {
  if (before.codomain_dim() != after.domain_dim()) throw ShapeError("maps do not compose");
  std::vector<SparseVector> cols;
  cols.reserve(before.domain_dim());
  for (const auto& c : before.columns()) cols.push_back(after.apply(c));
  return LinearMap(after.field(), before.domain_dim(), after.codomain_dim(), std::move(cols));
}

}  // namespace hochglue
