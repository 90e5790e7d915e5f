#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hochglue/algebra_file.hpp"
#include "hochglue/errors.hpp"
#include "hochglue/examples.hpp"
#include "hochglue/fundamental_group.hpp"
#include "hochglue/gluing.hpp"
#include "hochglue/higher_degrees.hpp"
#include "hochglue/strametz.hpp"
#include "hochglue/verification.hpp"

namespace {

using namespace hochglue;
using json = nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;

// "Q", "F5" or "F 5".
Field parse_field(std::string text) {
  std::erase(text, ' ');
  if (text == "Q") return Field::rationals();
  if (text.size() > 1 && text.front() == 'F') {
    try {
      std::size_t used = 0;
      const unsigned long p = std::stoul(text.substr(1), &used);
      if (used == text.size() - 1) return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::logic_error&) {
    }
  }
  throw Error("unknown field '" + text + "', expected Q or F<p>");
}

struct Input {
  std::string file;
  std::string example;
  std::string field;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "algebra file");
    cmd->add_option("--example", example, "use a built-in example instead of a file");
    cmd->add_option("--field", field, "override the field: Q or F<p>");
  }

  [[nodiscard]] MonomialAlgebra load() const {
    if (file.empty() == example.empty()) throw Error("give exactly one of FILE or --example");
    MonomialAlgebra a = example.empty() ? load_algebra(file) : parse_algebra(builtin_example(example).text);
    return field.empty() ? a : a.with_field(parse_field(field));
  }
};

// --alpha/--beta default to the example's arrows.
struct ArrowChoice {
  std::string alpha;
  std::string beta;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "first arrow to glue");
    cmd->add_option("--beta", beta, "second arrow to glue");
  }

  [[nodiscard]] GluedAlgebra glue_input(const Input& in, const MonomialAlgebra& a) const {
    std::string x = alpha;
    std::string y = beta;
    if (!in.example.empty()) {
      if (x.empty()) x = builtin_example(in.example).alpha;
      if (y.empty()) y = builtin_example(in.example).beta;
    }
    if (x.empty() || y.empty()) throw Error("--alpha and --beta are required");
    return glue(a, x, y);
  }
};

std::vector<std::size_t> parse_degrees(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error("bad degree range '" + text + "'");
    return static_cast<std::size_t>(v);
  };
  const auto dots = text.find("..");
  std::size_t lo = 0;
  std::size_t hi = 0;
  if (dots == std::string::npos) {
    lo = hi = number(text);
  } else {
    lo = number(text.substr(0, dots));
    hi = number(text.substr(dots + 2));
  }
  if (lo > hi) throw Error("bad degree range '" + text + "'");
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

int cmd_info(const Input& in) {
  const auto a = in.load();
  const Quiver& q = a.quiver();
  std::cout << "field: " << a.field().name() << "\n";
  std::cout << "vertices: " << q.vertex_count() << "\n";
  std::cout << "arrows: " << q.arrow_count() << "\n";
  for (auto x : q.arrows()) {
    std::cout << "  " << q.arrow(x).name << ": " << q.vertex_name(q.source(x)) << " -> " << q.vertex_name(q.target(x))
              << "\n";
  }
  std::cout << "relations: " << a.relations().size() << "\n";
  for (const auto& r : a.relations()) {
    std::cout << "  " << traversal(q, r) << "   (composite " << display(q, r) << ")\n";
  }
  std::cout << "dimension: " << a.dim() << "\n";
  std::cout << "radical square zero: " << (a.is_radical_square_zero() ? "yes" : "no") << "\n";
  std::cout << "components: " << connected_components(q).count << "\n";
  std::cout << "first Betti number: " << betti(q) << "\n";
  return exit_ok;
}

int cmd_hh(const Input& in, const std::string& degrees) {
  const auto a = in.load();
  const auto ns = parse_degrees(degrees);
  std::optional<StrametzComplex> c;
  for (auto n : ns) {
    if (n <= 1) {
      if (!c) c.emplace(a);
      std::cout << "HH^" << n << ": " << (n == 0 ? c->hh0().dim() : c->hh1_dim()) << "\n";
      continue;
    }
    auto d = hh_dim_high(a, n);
    if (d.crown) {
      std::cout << "HH^" << n << ": unsupported (" << d.message << ")\n";
    } else {
      std::cout << "HH^" << n << ": " << d.value.get_str() << "\n";
    }
  }
  return exit_ok;
}

int cmd_center(const Input& in) {
  const auto a = in.load();
  StrametzComplex c(a);
  std::cout << "dim Z(A): " << c.hh0().dim() << "\n";
  std::cout << "basis: " << format_subspace(a.quiver(), c.q0(), c.hh0()) << "\n";
  std::cout << "commutant oracle: " << oracle_center(a).dim() << "\n";
  return exit_ok;
}

int cmd_pi1(const Input& in) {
  std::cout << pi1_rank(in.load()) << "\n";
  return exit_ok;
}

int cmd_glue(const Input& in, const ArrowChoice& arrows, const std::string& out) {
  const auto a = in.load();
  const auto g = arrows.glue_input(in, a);
  const std::string text = print_algebra(g.b());
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << text;
    std::cout << "wrote " << out << "\n";
  }
  return exit_ok;
}

json report_json(const CheckReport& r, bool timings) {
  json j{{"check", r.check}, {"status", to_string(r.status)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"witness", r.witness}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  json details = json::array();
  for (const auto& [k, v] : r.details) details.push_back({{"name", k}, {"value", v}});
  j["details"] = details;
  if (!r.reproduction.empty()) j["reproduction"] = r.reproduction;
  if (timings) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

void print_report(const CheckReport& r, bool timings) {
  std::cout << r.check << ": " << to_string(r.status);
  if (r.status == CheckStatus::pass || r.status == CheckStatus::fail) std::cout << "  lhs=" << r.lhs << " rhs=" << r.rhs;
  if (!r.witness.empty()) std::cout << "  witness=" << r.witness;
  if (!r.reason.empty()) std::cout << "  (" << r.reason << ")";
  if (timings) std::cout << "  [" << r.elapsed_seconds << " s]";
  std::cout << "\n";
  for (const auto& [k, v] : r.details) std::cout << "    " << k << ": " << v << "\n";
  if (!r.reproduction.empty()) {
    std::istringstream lines(r.reproduction);
    std::string line;
    std::cout << "    reproduction:\n";
    while (std::getline(lines, line)) std::cout << "      " << line << "\n";
  }
}

std::vector<std::string> parse_checks(const std::string& text) {
  if (text.empty() || text == "all") return check_ids();
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (!id.empty()) out.push_back(id);
  }
  return out;
}

int cmd_verify(const Input& in, const ArrowChoice& arrows, const std::string& checks, bool as_json, bool timings) {
  const auto a = in.load();
  const auto ids = parse_checks(checks);
  for (const auto& id : ids) {
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      throw Error("unknown check '" + id + "'");
    }
  }
  GluingAnalysis an(arrows.glue_input(in, a));
  bool failed = false;
  for (const auto& id : ids) {
    auto r = run_check(id, an);
    failed = failed || r.status == CheckStatus::fail;
    if (as_json) {
      std::cout << report_json(r, timings).dump() << "\n";
    } else {
      print_report(r, timings);
    }
  }
  return failed ? exit_fail : exit_ok;
}

int cmd_examples(bool run, bool as_json, const std::string& show) {
  if (!show.empty()) {
    std::cout << builtin_example(show).text;
    return exit_ok;
  }
  bool failed = false;
  for (const auto& ex : builtin_examples()) {
    if (!run) {
      std::cout << ex.name << "  glue " << ex.alpha << " " << ex.beta << "  " << ex.description << "\n";
      continue;
    }
    GluingAnalysis an(glue(parse_algebra(ex.text), ex.alpha, ex.beta));
    if (!as_json) std::cout << "== " << ex.name << " (glue " << ex.alpha << " " << ex.beta << ")\n";
    for (const auto& r : run_checks(an, {})) {
      failed = failed || r.status == CheckStatus::fail;
      if (as_json) {
        json j = report_json(r, false);
        j["example"] = ex.name;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "  " << r.check << ": " << to_string(r.status);
        if (!r.witness.empty()) std::cout << " witness=" << r.witness;
        if (r.status == CheckStatus::fail) std::cout << " lhs=" << r.lhs << " rhs=" << r.rhs;
        std::cout << "\n";
      }
    }
  }
  return failed ? exit_fail : exit_ok;
}

int cmd_fuzz(std::uint64_t seed, std::size_t count, const std::string& checks, const std::string& fields,
             bool as_json) {
  FuzzOptions o;
  o.seed = seed;
  o.count = count;
  o.checks = checks.empty() || checks == "all" ? std::vector<std::string>{} : parse_checks(checks);
  for (const auto& id : o.checks) {
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      throw Error("unknown check '" + id + "'");
    }
  }
  o.fields.clear();
  std::istringstream in(fields);
  std::string name;
  while (std::getline(in, name, ',')) o.fields.push_back(parse_field(name));
  if (o.fields.empty()) throw Error("--fields is empty");
  const auto s = run_fuzz(o);
  if (as_json) {
    for (const auto& [check, by_status] : s.counts) {
      json j{{"check", check}};
      for (const auto& [status, n] : by_status) j[to_string(status)] = n;
      std::cout << j.dump() << "\n";
    }
    for (const auto& r : s.failures) std::cout << report_json(r, false).dump() << "\n";
  } else {
    std::cout << "instances: " << s.instances << "\n";
    for (const auto& [check, by_status] : s.counts) {
      std::cout << "  " << check << ":";
      for (const auto& [status, n] : by_status) std::cout << " " << to_string(status) << "=" << n;
      std::cout << "\n";
    }
    std::cout << "failures: " << s.failures.size() << "\n";
    for (const auto& r : s.failures) print_report(r, false);
  }
  return s.failures.empty() ? exit_ok : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of monomial algebras under arrow gluing"};
  app.require_subcommand(1);

  Input info_in;
  auto* info = app.add_subcommand("info", "summary of an algebra");
  info_in.attach(info);

  Input hh_in;
  std::string degrees = "0..1";
  auto* hh = app.add_subcommand("hh", "dimensions of Hochschild cohomology");
  hh_in.attach(hh);
  hh->add_option("--degrees", degrees, "a degree or a range lo..hi")->capture_default_str();

  Input center_in;
  auto* center = app.add_subcommand("center", "the center as Ker delta0");
  center_in.attach(center);

  Input pi1_in;
  auto* pi1 = app.add_subcommand("pi1-rank", "rank of the dual fundamental group");
  pi1_in.attach(pi1);

  Input glue_in;
  ArrowChoice glue_arrows;
  std::string glue_out;
  auto* gl = app.add_subcommand("glue", "glue two arrows and print the new algebra");
  glue_in.attach(gl);
  glue_arrows.attach(gl);
  gl->add_option("--out", glue_out, "write the glued algebra here");

  Input verify_in;
  ArrowChoice verify_arrows;
  std::string verify_checks = "all";
  bool verify_json = false;
  bool verify_timings = false;
  auto* verify = app.add_subcommand("verify", "run the checks on a gluing");
  verify_in.attach(verify);
  verify_arrows.attach(verify);
  verify->add_option("--checks", verify_checks, "comma-separated check ids or all")->capture_default_str();
  verify->add_flag("--json", verify_json, "one JSON object per report and line");
  verify->add_flag("--timings", verify_timings, "include elapsed times");

  bool examples_run = false;
  bool examples_json = false;
  std::string examples_show;
  auto* examples = app.add_subcommand("examples", "list, print or run the built-in examples");
  examples->add_flag("--run", examples_run, "run every check on every example");
  examples->add_flag("--json", examples_json, "with --run: JSON lines");
  examples->add_option("--show", examples_show, "print the algebra file of one example");

  std::uint64_t fuzz_seed = 1;
  std::size_t fuzz_count = 100;
  std::string fuzz_checks = "all";
  std::string fuzz_fields = "Q";
  bool fuzz_json = false;
  auto* fuzz = app.add_subcommand("fuzz", "run the checks on seeded random gluings");
  fuzz->add_option("--seed", fuzz_seed, "first seed")->capture_default_str();
  fuzz->add_option("--count", fuzz_count, "number of instances")->capture_default_str();
  fuzz->add_option("--checks", fuzz_checks, "comma-separated check ids or all")->capture_default_str();
  fuzz->add_option("--fields", fuzz_fields, "comma-separated fields, used round robin")->capture_default_str();
  fuzz->add_flag("--json", fuzz_json, "JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (*info) return cmd_info(info_in);
    if (*hh) return cmd_hh(hh_in, degrees);
    if (*center) return cmd_center(center_in);
    if (*pi1) return cmd_pi1(pi1_in);
    if (*gl) return cmd_glue(glue_in, glue_arrows, glue_out);
    if (*verify) return cmd_verify(verify_in, verify_arrows, verify_checks, verify_json, verify_timings);
    if (*examples) return cmd_examples(examples_run, examples_json, examples_show);
    if (*fuzz) return cmd_fuzz(fuzz_seed, fuzz_count, fuzz_checks, fuzz_fields, fuzz_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
