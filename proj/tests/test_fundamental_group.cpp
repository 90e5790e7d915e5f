#include <doctest.h>

#include "hochglue/fundamental_group.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// alpha: e1 -> e2, two parallel arrows e2 -> e3, beta: e3 -> e4; one cycle before gluing.
constexpr const char* double_middle = R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow x e2 e3
arrow y e2 e3
arrow beta e3 e4
)";

constexpr const char* two_crown = R"(field Q
vertex u
vertex w
arrow a u w
arrow b w u
rel a b
rel b a
)";

}  // namespace

TEST_CASE("pi1 rank before and after gluing") {
  auto an = GluingAnalysis(glue(example("a4-path"), "alpha", "beta"));
  CHECK(pi1_rank(an.gluing().a()) == 0);
  CHECK(pi1_rank(an.gluing().b()) == 1);
  for (const auto& ex : builtin_examples()) {
    auto g = glue(parse_algebra(ex.text), ex.alpha, ex.beta);
    long ca = static_cast<long>(connected_components(g.a().quiver()).count);
    long cb = static_cast<long>(connected_components(g.b().quiver()).count);
    CHECK_MESSAGE(static_cast<long>(pi1_rank(g.a())) == static_cast<long>(pi1_rank(g.b())) + ca - cb - 1, ex.name);
  }
}

TEST_CASE("chord duals") {
  auto a = example("a4-path");
  auto forest = chord_duals(a.quiver());
  CHECK(forest.chords.empty());
  CHECK(forest.tree.size() == 3);
  CHECK_THROWS_AS(chord_duals(a.quiver(), a.quiver().find_arrow("alpha")), CannotAvoidError);

  auto g = glue(a, "alpha", "beta");
  const Quiver& qb = g.b().quiver();
  auto fb = chord_duals(qb, g.glued_arrow());
  CHECK(fb.tree == std::vector<ArrowId>{*qb.find_arrow("eta")});
  CHECK(fb.chords == std::vector<ArrowId>{g.glued_arrow()});

  auto crown = parse_algebra(two_crown);
  CHECK(chord_duals(crown.quiver()).chords.size() == 1);
}

TEST_CASE("tree walks are reduced and connect the requested vertices") {
  auto a = parse_algebra(double_middle);
  const Quiver& q = a.quiver();
  auto forest = chord_duals(q);
  auto w = tree_walk(q, forest, *q.find_vertex("e4"), *q.find_vertex("e1"));
  CHECK(w.start() == *q.find_vertex("e4"));
  CHECK(w.end() == *q.find_vertex("e1"));
  CHECK(format_walk(q, w) == "beta^-1 x^-1 alpha^-1");
  CHECK(w == w.reduced());
}

TEST_CASE("theta of the glued arrow dual") {
  auto an = GluingAnalysis(glue(example("a4-path"), "alpha", "beta"));
  const Quiver& qb = an.gluing().b().quiver();
  auto fb = chord_duals(qb, an.gluing().glued_arrow());
  ParadeData pb;
  for (auto v : qb.vertices()) pb.walks.push_back(tree_walk(qb, fb, an.gluing().f2(), v));
  CHECK(theta(an.complex_b(), an.gluing().glued_arrow(), pb) == an.gamma_pair());
}

TEST_CASE("theta images are independent modulo inner derivations") {
  std::vector<MonomialAlgebra> algebras{parse_algebra(double_middle), parse_algebra(two_crown)};
  for (const auto& ex : builtin_examples()) {
    auto g = glue(parse_algebra(ex.text), ex.alpha, ex.beta);
    algebras.push_back(g.b());
  }
  for (const auto& a : algebras) {
    StrametzComplex c(a);
    auto forest = chord_duals(a.quiver());
    auto parade = tree_parade(a.quiver(), forest);
    Subspace s = c.im_delta0();
    for (auto chord : forest.chords) s.insert(theta(c, chord, parade));
    CHECK(s.dim() == c.im_delta0().dim() + betti(a.quiver()));
  }
}

TEST_CASE("theta diagram for source-sink gluings in one block") {
  {
    auto r = check_theta_diagram(GluingAnalysis(glue(example("a4-path"), "alpha", "beta")));
    CHECK(r.applicable);
    CHECK(r.left_square);
    CHECK(r.generators.empty());
    CHECK(r.walk_v == "eta");
    CHECK(r.commutes());
  }
  {
    auto r = check_theta_diagram(GluingAnalysis(glue(parse_algebra(double_middle), "alpha", "beta")));
    CHECK(r.applicable);
    CHECK(r.left_square);
    REQUIRE(r.generators.size() == 1);
    CHECK(r.generators[0].chord == "y");
    CHECK_FALSE(r.generators[0].lhs.is_zero());
    CHECK(r.commutes());
  }
}

TEST_CASE("theta diagram is not applicable elsewhere") {
  auto r = check_theta_diagram(GluingAnalysis(glue(example("two-blocks"), "alpha", "beta")));
  CHECK_FALSE(r.applicable);
  CHECK(r.reason.find("different blocks") != std::string::npos);
  CHECK_FALSE(check_theta_diagram(GluingAnalysis(glue(example("rad-square-zero-pairs"), "alpha", "beta"))).applicable);
}
