// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failed criteria.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hochglue/fundamental_group.hpp"
#include "hochglue/higher_degrees.hpp"
#include "hochglue/verification.hpp"
#include "support.hpp"

using namespace testing;

namespace {

constexpr double time_budget_seconds = 10.0;

class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  [[nodiscard]] bool ok() const { return failed_.empty(); }
  [[nodiscard]] std::string summary() const {
    std::ostringstream out;
    out << (total_ - failed_.size()) << "/" << total_ << " assertions";
    for (std::size_t i = 0; i < failed_.size() && i < 6; ++i) out << "\n      failed: " << failed_[i];
    if (failed_.size() > 6) out << "\n      ... " << failed_.size() - 6 << " more";
    return out.str();
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
};

GluingAnalysis analysis(const std::string& name) {
  const auto& ex = builtin_example(name);
  return GluingAnalysis(glue(parse_algebra(ex.text), ex.alpha, ex.beta));
}

std::set<std::string> words(const Quiver& q, const std::vector<Path>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(traversal(q, p));
  return out;
}

std::string shown(const Quiver& q, const PairSpace& space, const Subspace& s) { return format_subspace(q, space, s); }

const std::vector<Field>& four_fields() {
  static const std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
  return fields;
}

// ---- criteria ----------------------------------------------------------------

void golden_a4(Expect& expect) {
  auto an = analysis("a4-two-relations");
  const auto& cb = an.complex_b();
  const Quiver& qb = an.gluing().b().quiver();
  const Field& f = cb.field();
  auto expected = span(qb, cb.q1(), f, {{{1, "gamma*", "gamma*"}, {-1, "eta", "eta"}}});
  expect(cb.im_delta0() == expected, "Im d0_B = " + shown(qb, cb.q1(), cb.im_delta0()));
  expect(cb.im_delta0().dim() == 1, "dim Im d0_B = 1");
  expect(!cb.im_delta0().contains(an.gamma_pair()), "gamma*||gamma* not in Im d0_B");
  auto forest = chord_duals(qb, an.gluing().glued_arrow());
  ParadeData parade;
  for (auto v : qb.vertices()) parade.walks.push_back(tree_walk(qb, forest, an.gluing().f2(), v));
  expect(theta(cb, an.gluing().glued_arrow(), parade) == an.gamma_pair(), "theta(g*) = gamma*||gamma*");
}

void golden_six_pairs(Expect& expect) {
  auto an = analysis("rad-square-zero-pairs");
  const Quiver& qa = an.gluing().a().quiver();
  expect(an.complex_a().ker_delta1().dim() == 7, "dim Ker d1_A = 7");
  expect(an.complex_b().ker_delta1().dim() == 10, "dim Ker d1_B = 10");
  auto spp = an.special_pairs();
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& pr : spp.pairs) got.emplace(qa.arrow(pr.arrow).name, traversal(qa, pr.path));
  expect(got == std::set<std::pair<std::string, std::string>>{{"alpha", "eta"}, {"eta", "alpha"}, {"beta", "eta"},
                                                              {"eta", "beta"}, {"b", "eta"}, {"eta", "b"}},
         "Spp is the six-pair set");
  expect(spp.pairs.size() == 6, "|Spp| = 6");
  expect(spp.kspp == 4, "kspp = 4");
  auto image = an.psi1().apply(an.complex_a().ker_delta1());
  expect(intersect(image, spp.z_spp).dim() == 0, "psi1(Ker d1_A) meets Z_spp trivially");
  expect(sum(image, spp.z_spp) == an.complex_b().ker_delta1(), "psi1(Ker d1_A) + Z_spp = Ker d1_B");
  auto r = run_check("ker_delta1_structure", an);
  expect(r.status == CheckStatus::pass, "ker_delta1_structure passes");
}

void golden_loop_square(Expect& expect) {
  {
    auto a = example("loop-square");
    StrametzComplex c(a);
    const Quiver& q = a.quiver();
    auto expected = span(q, c.q1(), a.field(),
                         {{{1, "alpha", "alpha"}},
                          {{1, "eta", "eta"}},
                          {{1, "beta", "beta"}},
                          {{1, "xi", "xi"}},
                          {{1, "alpha", "xi alpha"}}});
    expect(c.ker_delta1() == expected, "Ker d1_A over Q has the five generators");
    StrametzComplex c2(a.with_field(Field::prime(2)));
    auto expected2 = span(q, c2.q1(), c2.field(),
                          {{{1, "alpha", "alpha"}},
                           {{1, "eta", "eta"}},
                           {{1, "beta", "beta"}},
                           {{1, "xi", "xi"}},
                           {{1, "alpha", "xi alpha"}},
                           {{1, "xi", "e1"}}});
    expect(c2.ker_delta1() == expected2, "Ker d1_A over F2 has the six generators");
  }
  {
    auto an = analysis("loop-square-f2");
    auto as = an.assumption();
    expect(!as.holds, "assumption fails in characteristic 2");
    expect(as.witness && an.gluing().a().quiver().arrow(as.witness->first).name == "xi" && as.witness->second == 2,
           "witness (xi, 2)");
  }
  auto an = analysis("loop-square");
  const Quiver& qb = an.gluing().b().quiver();
  const auto& cb = an.complex_b();
  auto z_spp = an.special_pairs().z_spp;
  auto z_sp = an.special_paths().z_sp;
  auto expected = span(qb, cb.q1(), cb.field(), {{{1, "gamma*", "eta"}}});
  expect(z_spp == expected, "Z_spp = <gamma*||eta>, computed " + shown(qb, cb.q1(), z_spp));
  expect(z_sp.dim() == 0, "Z_sp = 0");
  expect(z_spp.contains(z_sp) && z_spp.dim() > z_sp.dim(), "Z_spp strictly contains Z_sp");
}

void golden_different_blocks(Expect& expect) {
  auto an = analysis("different-block-image");
  const auto& ca = an.complex_a();
  const auto& cb = an.complex_b();
  const Quiver& qa = an.gluing().a().quiver();
  const Quiver& qb = an.gluing().b().quiver();
  auto ia = span(qa, ca.q1(), ca.field(),
                 {{{1, "alpha", "alpha"}, {1, "a", "a"}}, {{1, "b", "b"}, {-1, "a", "a"}}, {{1, "beta", "beta"}}});
  expect(ca.im_delta0() == ia, "Im d0_A = " + shown(qa, ca.q1(), ca.im_delta0()));
  auto ib = span(qb, cb.q1(), cb.field(), {{{1, "gamma*", "gamma*"}, {1, "a", "a"}}, {{1, "b", "b"}, {-1, "a", "a"}}});
  expect(cb.im_delta0() == ib, "Im d0_B = " + shown(qb, cb.q1(), cb.im_delta0()));
  expect(an.psi1().kernel_on(ca.im_delta0()).dim() == 0, "Ker(psi1 on Im d0_A) = 0");
}

void golden_pairs_and_nsp(Expect& expect) {
  for (int t = 1; t <= 5; ++t) {
    auto kspp = analysis("loops-t" + std::to_string(t)).special_pairs().kspp;
    expect(kspp == static_cast<std::size_t>(2 * t), "kspp = 2t for t = " + std::to_string(t));
  }
  {
    auto an = analysis("combination-generator");
    const Quiver& qb = an.gluing().b().quiver();
    const auto& f = an.complex_b().field();
    const auto& q1 = an.complex_b().q1();
    auto z = an.special_pairs().z_spp;
    expect(z.contains(vec(qb, q1, f, {{1, "a", "p a"}, {-1, "b", "b p"}})), "a*||a*p* - b*||p*b* in Z_spp");
    expect(!z.contains(vec(qb, q1, f, {{1, "a", "p a"}})), "a*||a*p* alone is not a cocycle");
    expect(!z.contains(vec(qb, q1, f, {{1, "b", "b p"}})), "b*||p*b* alone is not a cocycle");
  }
  {
    auto an = analysis("a4-path");
    const Quiver& qb = an.gluing().b().quiver();
    auto n = an.nsp_data();
    expect(words(an.gluing().a().quiver(), n.paths) == std::set<std::string>{"alpha eta", "eta beta"},
           "NSp = {eta alpha, beta eta}");
    expect(n.z_nsp == span(qb, an.complex_b().q0(), an.complex_b().field(),
                           {{{1, "e1+e3", "gamma* eta"}, {1, "e2+e4", "eta gamma*"}}}),
           "Z_nsp = <f1||eta*gamma* + f2||gamma*eta*>");
  }
  {
    auto an = analysis("center-cancellation");
    const Quiver& qb = an.gluing().b().quiver();
    auto n = an.nsp_data();
    expect(words(an.gluing().a().quiver(), n.paths) ==
               std::set<std::string>{"a xi", "beta b a xi", "b a", "b a xi alpha"},
           "NSp = A(1,3) u A(2,4)");
    expect(n.z_nsp == span(qb, an.complex_b().q0(), an.complex_b().field(),
                           {{{1, "e1+e3", "gamma* b a xi"}, {1, "e2+e4", "b a xi gamma*"}}}),
           "Z_nsp = <f1||xi*a*b*gamma* + f2||gamma*xi*a*b*>");
  }
}

void gluing_construction(Expect& expect) {
  struct Case {
    const char* name;
    std::set<std::string> z_new;
  };
  const std::vector<Case> cases{
      {"rad-cube-zero",
       {"eta lambda", "eta b", "lambda xi", "mu xi", "eta gamma* xi", "xi mu", "b eta", "xi gamma* eta"}},
      {"a4-path", {"eta gamma* eta"}},
      {"two-blocks", {"delta gamma* epsilon"}},
  };
  for (const auto& c : cases) {
    auto a = example(c.name);
    const auto& ex = builtin_example(c.name);
    auto g = glue(a, ex.alpha, ex.beta);
    expect(words(g.b().quiver(), g.z_new()) == c.z_new, std::string("Z_new for ") + c.name);
    expect(g.b().dim() + 3 == a.dim(), std::string("dim B = dim A - 3 for ") + c.name);
  }
}

void fuzz_theorems(Expect& expect) {
  FuzzOptions o;
  o.seed = 1;
  o.count = 1000;
  o.checks = {"im_delta0_dim", "ker_delta1_structure", "hh1_dim_general", "center_indec", "center_diff_blocks",
              "pi1_rank"};
  o.fields = four_fields();
  auto s = run_fuzz(o);
  expect(s.instances == 1000, "1000 instances");
  expect(s.count("construction", CheckStatus::fail) == 0, "every instance builds");
  for (const auto& id : o.checks) {
    const auto fails = s.count(id, CheckStatus::fail);
    expect(fails == 0, id + ": " + std::to_string(fails) + " fail, " +
                           std::to_string(s.count(id, CheckStatus::pass)) + " pass");
  }
}

void oracle_equivalence(Expect& expect) {
  std::vector<MonomialAlgebra> algebras;
  for (const auto& ex : builtin_examples()) {
    auto a = parse_algebra(ex.text);
    algebras.push_back(glue(a, ex.alpha, ex.beta).b());
    algebras.push_back(std::move(a));
  }
  const std::size_t corpus = algebras.size();
  for (std::uint64_t s = 0; s < 200; ++s) {
    RandomSpec spec;
    spec.seed = 1000 + s;
    algebras.push_back(random_instance(spec));
  }
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    for (const auto& f : four_fields()) {
      auto a = algebras[i].with_field(f);
      StrametzComplex c(a);
      const std::string where = (i < corpus ? "corpus #" : "random #") + std::to_string(i) + " over " + f.name();
      expect(oracle_center(a).dim() == c.hh0().dim(), "HH0 " + where);
      expect(oracle_hh1_dim(a) == c.hh1_dim(), "HH1 " + where);
    }
  }
}

mpz_class pow_m(long m, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(m), e);
  return r;
}

void higher_degrees(Expect& expect) {
  for (const char* name : {"zigzag-4", "zigzag-6"}) {
    auto a = example(name);
    auto g = glue(a, "alpha", "beta");
    for (std::size_t n = 2; n <= 12; ++n) {
      expect(hh_dim_high(a, n).value == 0, std::string(name) + " A n=" + std::to_string(n));
      expect(hh_dim_high(g.b(), n).value == 0, std::string(name) + " B n=" + std::to_string(n));
    }
  }
  for (long m : {2L, 3L}) {
    auto a = example("kronecker-line-m" + std::to_string(m));
    auto g = glue(a, "alpha", "beta");
    for (std::size_t n = 2; n <= 9; ++n) {
      mpz_class expected = n % 2 == 1 ? pow_m(m, (n + 3) / 2) - pow_m(m, (n - 1) / 2) : mpz_class(0);
      mpz_class diff = hh_dim_high(g.b(), n).value - hh_dim_high(a, n).value;
      expect(diff == expected, "kronecker m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  expect(hh_dim_high(glue(example("kronecker-line-m2"), "alpha", "beta").b(), 3).value == 6, "m=2 n=3 gives 6");
  expect(hh_dim_high(glue(example("kronecker-line-m3"), "alpha", "beta").b(), 5).value == 72, "m=3 n=5 gives 72");

  std::size_t applicable = 0;
  for (std::uint64_t s = 1; s <= 1000; ++s) {
    auto inst = random_fuzz_instance(s, FuzzMode::source_sink, RandomSpec{});
    if (!inst.algebra.is_radical_square_zero()) continue;
    auto r = check_high_degree_gluing(glue(inst.algebra, inst.gluing.alpha, inst.gluing.beta), 12, 20000);
    if (!r.applicable) continue;
    ++applicable;
    expect(r.holds(), "monotonicity for source-sink seed " + std::to_string(s));
  }
  expect(applicable >= 100, "radical square zero source-sink gluings checked: " + std::to_string(applicable));
}

void lie_structure(Expect& expect) {
  std::size_t applicable = 0;
  for (const auto& ex : builtin_examples()) {
    auto an = analysis(ex.name);
    for (const char* id : {"hh1_lie_iso", "hh1_central_summand"}) {
      auto r = run_check(id, an);
      if (r.status == CheckStatus::not_applicable) continue;
      ++applicable;
      expect(r.status == CheckStatus::pass, ex.name + " " + id + ": " + to_string(r.status));
    }
  }
  FuzzOptions o;
  o.seed = 1;
  o.count = 1000;
  o.checks = {"hh1_lie_iso", "hh1_central_summand"};
  auto s = run_fuzz(o);
  for (const auto& id : o.checks) {
    expect(s.count(id, CheckStatus::fail) == 0, id + " fails in fuzz: " + std::to_string(s.count(id, CheckStatus::fail)));
    applicable += s.count(id, CheckStatus::pass);
  }
  expect(s.count("hh1_lie_iso", CheckStatus::pass) > 0, "fuzz has applicable source-sink instances");
  expect(applicable > 0, "some instance is applicable");
}

std::string capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) throw Error("cannot run " + command);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

void determinism(Expect& expect, const std::string& cli) {
  if (cli.empty()) {
    expect(false, "path of the hochglue executable not given");
  } else {
    const std::vector<std::string> commands{
        "examples --run --json",
        "verify --example loop-square --json",
        "glue --example rad-cube-zero",
        "hh --example kronecker-line-m3 --degrees 0..9",
        "fuzz --seed 5 --count 60 --fields Q,F2,F3,F5 --json",
    };
    for (const auto& c : commands) {
      const std::string full = "\"" + cli + "\" " + c + " 2>&1";
      auto first = capture(full);
      auto second = capture(full);
      expect(!first.empty() && first == second, "byte-identical output of: hochglue " + c);
    }
  }
  for (const auto& ex : builtin_examples()) {
    auto a = parse_algebra(ex.text);
    for (const auto& f : four_fields()) {
      auto g1 = glue(a.with_field(f), ex.alpha, ex.beta);
      auto g2 = glue(a.with_field(f), ex.alpha, ex.beta);
      for (const MonomialAlgebra* pair : {&g1.a(), &g1.b()}) {
        StrametzComplex x(*pair);
        StrametzComplex y(pair == &g1.a() ? g2.a() : g2.b());
        bool same = x.hh0() == y.hh0() && x.im_delta0() == y.im_delta0() && x.ker_delta1() == y.ker_delta1() &&
                    x.hh1_representatives() == y.hh1_representatives();
        std::vector<SparseVector> reversed(x.ker_delta1().rows().rbegin(), x.ker_delta1().rows().rend());
        same = same && Subspace::span(x.field(), x.q1().size(), reversed) == x.ker_delta1();
        expect(same, "echelon matrices for " + ex.name + " over " + f.name());
      }
    }
  }
}

struct Criterion {
  int number;
  std::string title;
  std::function<void(Expect&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "A4 with two relations: Im d0_B and theta", golden_a4},
      {2, "six special pairs: kernel decomposition", golden_six_pairs},
      {3, "loop with square zero: kernels, assumption, Z_spp", golden_loop_square},
      {4, "gluing across blocks: images of d0", golden_different_blocks},
      {5, "special pair counts, combination generator, Z_nsp", golden_pairs_and_nsp},
      {6, "gluing construction: Z_new and dimension drop", gluing_construction},
      {7, "dimension statements on 1000 fuzz instances", fuzz_theorems},
      {8, "oracle equivalence over Q, F2, F3, F5", oracle_equivalence},
      {9, "higher degrees", higher_degrees},
      {10, "HH1 Lie structure on source-sink gluings", lie_structure},
      {11, "determinism", [&cli](Expect& e) { determinism(e, cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Expect expect;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(expect);
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < time_budget_seconds, "time budget of 10 s");
    const bool ok = expect.ok();
    if (!ok) ++failed;
    std::printf("criterion %2d %s: %s [%.2f s]\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), secs);
    std::printf("      %s\n", expect.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
