#include <doctest.h>

#include <random>

#include "hochglue/errors.hpp"
#include "hochglue/linalg.hpp"

using namespace hochglue;

namespace {

SparseVector dense(const Field& f, const std::vector<long>& v) {
  std::vector<std::pair<Index, Scalar>> e;
  for (Index i = 0; i < v.size(); ++i) e.emplace_back(i, f.from_int(v[i]));
  return SparseVector(f, std::move(e));
}

LinearMap random_map(const Field& f, std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<long> v(n);
    for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
    if (rng() % 3 == 0) v.assign(n, 0);
    cols.push_back(dense(f, v));
  }
  return LinearMap(f, m, n, std::move(cols));
}

LinearMap transpose(const LinearMap& m) {
  std::vector<std::vector<std::pair<Index, Scalar>>> rows(m.codomain_dim());
  for (Index j = 0; j < m.domain_dim(); ++j) {
    for (const auto& [i, c] : m.columns()[j].entries()) rows[i].emplace_back(j, c);
  }
  std::vector<SparseVector> cols;
  for (auto& r : rows) cols.emplace_back(m.field(), std::move(r));
  return LinearMap(m.field(), m.codomain_dim(), m.domain_dim(), std::move(cols));
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field q = Field::rationals();
  CHECK(q.add(Scalar(1, 2), Scalar(1, 3)) == Scalar(5, 6));
  Field f5 = Field::prime(5);
  CHECK(f5.from_int(-1) == Scalar(4));
  CHECK(f5.mul(Scalar(3), Scalar(4)) == Scalar(2));
  CHECK(f5.mul(f5.inv(Scalar(3)), Scalar(3)) == Scalar(1));
  CHECK(f5.normalize(Scalar(1, 2)) == Scalar(3));
  CHECK_THROWS(Field::prime(4));
  CHECK(Field::prime(2).name() == "F2");
}

TEST_CASE("zero and identity maps") {
  Field f = Field::rationals();
  LinearMap zero(f, 3, 2);
  CHECK(zero.kernel().dim() == 3);
  CHECK(zero.image().dim() == 0);
  LinearMap id(f, 3, 3, {SparseVector::unit(0), SparseVector::unit(1), SparseVector::unit(2)});
  CHECK(id.kernel().dim() == 0);
  CHECK(id.image().dim() == 3);
  CHECK_THROWS_AS(LinearMap(f, 2, 1, {SparseVector::unit(0), SparseVector::unit(3)}), ShapeError);
}

TEST_CASE("rank-nullity and rank of transpose over Q and F_p") {
  std::mt19937_64 rng(7);
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t m = 1 + rng() % 7;
      std::size_t n = 1 + rng() % 7;
      LinearMap a = random_map(f, rng, m, n);
      Subspace k = a.kernel();
      CHECK(k.dim() + a.image().dim() == m);
      CHECK(a.image().dim() == transpose(a).image().dim());
      for (const auto& r : k.rows()) CHECK(a.apply(r).is_zero());
    }
  }
}

TEST_CASE("echelon form is canonical") {
  Field f = Field::rationals();
  auto s1 = Subspace::span(f, 4, {dense(f, {1, 2, 0, 3}), dense(f, {0, 1, 1, 1})});
  auto s2 = Subspace::span(f, 4, {dense(f, {2, 5, 1, 7}), dense(f, {1, 1, -1, 2}), dense(f, {3, 6, 0, 9})});
  CHECK(s1 == s2);
  CHECK(s1.rows() == s2.rows());
  for (const auto& r : s1.rows()) CHECK(r.entries().front().second == Scalar(1));
}

TEST_CASE("membership, sums and intersections") {
  Field f = Field::rationals();
  auto s = Subspace::span(f, 3, {dense(f, {1, -1, 0})});
  CHECK_FALSE(s.contains(dense(f, {1, 0, 0})));
  CHECK(s.contains(dense(f, {-2, 2, 0})));
  CHECK(intersect(s, s) == s);
  auto t = Subspace::span(f, 3, {dense(f, {1, 0, 0}), dense(f, {0, 0, 1})});
  CHECK(intersect(s, t).dim() == 0);
  CHECK(is_direct_sum(s, t));
  CHECK(sum(s, t).dim() == 3);
  auto u = Subspace::span(f, 3, {dense(f, {1, 1, 0}), dense(f, {0, 0, 1})});
  auto w = intersect(t, u);
  CHECK(w == Subspace::span(f, 3, {dense(f, {0, 0, 1})}));
  CHECK(quotient_dim(w, t) == 1);
  CHECK_THROWS_AS((void)quotient_dim(t, s), ContainmentError);
  CHECK_FALSE(is_direct_sum(t, u));
}

TEST_CASE("complement and coordinates") {
  Field f = Field::prime(3);
  auto outer = Subspace::whole(f, 3);
  auto inner = Subspace::span(f, 3, {dense(f, {1, 1, 0})});
  auto c = complement(outer, inner);
  CHECK(c.dim() == 2);
  CHECK(is_direct_sum(c, inner));
  auto coords = outer.coordinates(dense(f, {2, 0, 1}));
  CHECK(coords == std::vector<Scalar>{Scalar(2), Scalar(0), Scalar(1)});
  CHECK_THROWS_AS((void)inner.coordinates(dense(f, {1, 0, 0})), ContainmentError);
}

TEST_CASE("kernel restricted to a subspace") {
  Field f = Field::rationals();
  LinearMap a(f, 3, 1, {dense(f, {1}), dense(f, {1}), dense(f, {0})});
  auto s = Subspace::span(f, 3, {dense(f, {1, 0, 0}), dense(f, {0, 1, 0})});
  auto k = a.kernel_on(s);
  CHECK(k == Subspace::span(f, 3, {dense(f, {1, -1, 0})}));
}
