#include <doctest.h>

#include <map>
#include <set>

#include "hochglue/verification.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<Field>& all_fields() {
  static const std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
  return fields;
}

GluingAnalysis analysis(const std::string& name) {
  const auto& ex = builtin_example(name);
  return GluingAnalysis(glue(parse_algebra(ex.text), ex.alpha, ex.beta));
}

// Two blocks; x is parallel to alpha and z o x becomes a new length-2 relation after gluing.
constexpr const char* new_length_two = R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow x e1 e2
arrow beta e3 e4
arrow z e4 e3
rel z beta
)";

// Checks that report fail on the corpus; every one is an independent counterexample
// (the oracle confirms both HH1 dimensions), see the decisions ledger.
const std::map<std::string, std::set<std::string>> known_failures{
    {"rad-cube-zero", {"ker_delta1_hom", "ker_delta1_structure", "hh1_dim_general"}},
    {"rad-square-zero-pairs", {"ker_delta1_hom"}},
    {"combination-generator", {"ker_delta1_hom"}},
    {"center-cancellation", {"ker_delta1_hom"}},
};

}  // namespace

TEST_CASE("commutant oracle on small algebras") {
  CHECK(oracle_center(parse_algebra("field Q\nvertex v\n")).dim() == 1);
  CHECK(oracle_hh1_dim(parse_algebra("field Q\nvertex u\nvertex v\nvertex w\n")) == 0);
  // rad^2 = 0 without loops: the center is spanned by 1 alone
  CHECK(oracle_center(example("kronecker-line-m2")).dim() == 1);
  // one loop with square zero: dim Z = |Q1||Q0| + 1
  CHECK(oracle_center(parse_algebra("field Q\nvertex v\narrow l v v\nrel l l\n")).dim() == 2);
}

TEST_CASE("oracles agree with the Strametz complex on the corpus in every characteristic") {
  for (const auto& ex : builtin_examples()) {
    const auto base = parse_algebra(ex.text);
    auto g = glue(base, ex.alpha, ex.beta);
    for (const auto& f : all_fields()) {
      for (const MonomialAlgebra* alg : {&base, &g.b()}) {
        auto a = alg->with_field(f);
        StrametzComplex c(a);
        CHECK_MESSAGE(oracle_center(a).dim() == c.hh0().dim(), ex.name, " over ", f.name());
        CHECK_MESSAGE(oracle_hh1_dim(a) == c.hh1_dim(), ex.name, " over ", f.name());
      }
    }
  }
}

TEST_CASE("oracle HH1 depends on the characteristic for the square loop") {
  auto q = example("loop-square");
  auto f2 = example("loop-square-f2");
  CHECK(oracle_hh1_dim(q) != oracle_hh1_dim(f2));
  auto d = oracle_derivations(q);
  CHECK(d.der - d.inner == StrametzComplex(q).hh1_dim());
}

TEST_CASE("golden corpus statuses") {
  for (const auto& ex : builtin_examples()) {
    auto an = analysis(ex.name);
    auto known = known_failures.count(ex.name) ? known_failures.at(ex.name) : std::set<std::string>{};
    for (const auto& r : run_checks(an, {})) {
      const bool expected_fail = known.count(r.check) > 0;
      CHECK_MESSAGE((r.status == CheckStatus::fail) == expected_fail, ex.name, " ", r.check, " ", to_string(r.status));
      if (r.status == CheckStatus::fail) CHECK_FALSE(r.reproduction.empty());
      if (r.status == CheckStatus::not_applicable) CHECK_FALSE(r.reason.empty());
    }
  }
}

TEST_CASE("kernel decomposition for six special pairs") {
  auto r = run_check("ker_delta1_structure", analysis("rad-square-zero-pairs"));
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.lhs == "10");
  CHECK(r.rhs == "10");
  std::map<std::string, std::string> d(r.details.begin(), r.details.end());
  CHECK(d["dim Ker d1_A"] == "7");
  CHECK(d["dim Ker d1_B"] == "10");
  CHECK(d["kspp"] == "4");
  CHECK(d["direct sum"] == "true");
}

TEST_CASE("assumption violation in characteristic two") {
  auto an = analysis("loop-square-f2");
  for (const char* id : {"hh1_dim_general", "ker_delta1_structure", "ker_delta1_hom"}) {
    auto r = run_check(id, an);
    CHECK(r.status == CheckStatus::assumption_violated);
    CHECK(r.witness == "(xi, 2)");
  }
  CHECK(run_check("hh1_dim_general", analysis("loop-square")).status == CheckStatus::pass);
}

TEST_CASE("source-sink checks on the A4 path") {
  auto an = analysis("a4-path");
  CHECK(run_check("gamma_not_in_image", an).status == CheckStatus::pass);
  CHECK(run_check("hh1_central_summand", an).status == CheckStatus::pass);
  CHECK(run_check("theta_diagram", an).status == CheckStatus::pass);
  CHECK(run_check("center_diff_blocks", an).status == CheckStatus::not_applicable);
  CHECK_THROWS_AS(run_check("no_such_check", an), Error);
  CHECK(check_ids().size() == 18);
}

TEST_CASE("new length-two relations break the general kernel statement") {
  auto a = parse_algebra(new_length_two);
  GluingAnalysis an(glue(a, "alpha", "beta"));
  REQUIRE(oracle_hh1_dim(a) == 4);
  REQUIRE(oracle_hh1_dim(an.gluing().b()) == 3);
  auto r = run_check("hh1_dim_general", an);
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.lhs == "4");
  CHECK(r.rhs == "3");
  CHECK(run_check("ker_delta1_structure", an).status == CheckStatus::fail);
  CHECK(r.reproduction.find("# glue alpha beta") != std::string::npos);
  CHECK(parse_algebra(r.reproduction) == a);
  CHECK(run_check("im_delta0_dim", an).status == CheckStatus::pass);
  CHECK(run_check("center_diff_blocks", an).status == CheckStatus::pass);
}

TEST_CASE("random instances are reproducible and valid") {
  RandomSpec spec;
  spec.seed = 42;
  auto a = random_instance(spec);
  auto b = random_instance(spec);
  CHECK(a == b);
  CHECK(a.quiver().vertex_count() <= spec.max_vertices);
  CHECK(a.quiver().arrow_count() <= spec.max_arrows);
  for (const auto& rel : a.relations()) CHECK(rel.length() <= spec.max_relation_length);
  CHECK(parse_algebra(print_algebra(a)) == a);

  spec.seed = 43;
  spec.field = Field::prime(3);
  CHECK(random_instance(spec).field() == Field::prime(3));

  RandomSpec tiny;
  tiny.max_arrows = 1;
  for (std::uint64_t s = 0; s < 20; ++s) {
    tiny.seed = s;
    CHECK_FALSE(random_gluing(random_instance(tiny), s).has_value());
  }
}

TEST_CASE("random gluings use four distinct vertices") {
  RandomSpec spec;
  std::size_t found = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    spec.seed = s;
    spec.min_vertices = 4;
    auto a = random_instance(spec);
    auto g = random_gluing(a, s);
    if (!g) continue;
    ++found;
    const Quiver& q = a.quiver();
    std::set<std::uint32_t> ends{q.source(g->alpha).value, q.target(g->alpha).value, q.source(g->beta).value,
                                 q.target(g->beta).value};
    CHECK(ends.size() == 4);
    CHECK(random_gluing(a, s) == g);
    CHECK_NOTHROW(glue(a, g->alpha, g->beta));
  }
  CHECK(found > 25);
}

TEST_CASE("fuzz instances by mode") {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    auto ss = random_fuzz_instance(s, FuzzMode::source_sink, RandomSpec{});
    const Quiver& q = ss.algebra.quiver();
    CHECK(is_source_arrow(q, ss.gluing.alpha));
    CHECK(is_sink_arrow(q, ss.gluing.beta));
    CHECK(connected_components(q).count == 1);

    auto tb = random_fuzz_instance(s, FuzzMode::two_block, RandomSpec{});
    CHECK(connected_components(tb.algebra.quiver()).count == 2);
    CHECK_FALSE(gluing_kind(glue(tb.algebra, tb.gluing.alpha, tb.gluing.beta)).same_block);

    auto gen = random_fuzz_instance(s, FuzzMode::generic, RandomSpec{});
    CHECK_NOTHROW(glue(gen.algebra, gen.gluing.alpha, gen.gluing.beta));
  }
}

TEST_CASE("small fuzz run is deterministic") {
  FuzzOptions o;
  o.seed = 7;
  o.count = 45;
  o.fields = {Field::rationals(), Field::prime(5)};
  auto x = run_fuzz(o);
  auto y = run_fuzz(o);
  CHECK(x.instances == 45);
  CHECK(x.counts == y.counts);
  CHECK(x.failures.size() == y.failures.size());
  for (const char* id : {"im_delta0_dim", "pi1_rank", "center_geq1", "hh1_lie_iso", "im_delta0_structure",
                         "gamma_not_in_image", "theta_diagram"}) {
    CHECK_MESSAGE(x.count(id, CheckStatus::fail) == 0, id);
  }
  CHECK(x.count("hh1_lie_iso", CheckStatus::pass) > 0);
  CHECK(x.count("construction", CheckStatus::fail) == 0);
}
