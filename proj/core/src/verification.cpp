#include "hochglue/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "hochglue/algebra_file.hpp"
#include "hochglue/errors.hpp"
#include "hochglue/fundamental_group.hpp"
#include "hochglue/higher_degrees.hpp"
#include "hochglue/strametz.hpp"

namespace hochglue {

// ---- oracles -------------------------------------------------------------

namespace {

// x*y on the path basis, x applied after y.
SparseVector product(const MonomialAlgebra& a, const SparseVector& x, const SparseVector& y) {
  const Field& f = a.field();
  std::vector<std::pair<Index, Scalar>> e;
  for (const auto& [i, c] : x.entries()) {
    for (const auto& [j, d] : y.entries()) {
      if (auto p = a.multiply(a.basis()[i], a.basis()[j])) e.emplace_back(*a.basis_index(*p), f.mul(c, d));
    }
  }
  return SparseVector(f, std::move(e));
}

SparseVector basis_vector(const MonomialAlgebra& a, const Path& p) { return SparseVector::unit(*a.basis_index(p)); }

}  // namespace

Subspace oracle_center(const MonomialAlgebra& a) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  LinearMap m(f, d, d * d);
  for (Index i = 0; i < d; ++i) {
    SparseVector z = SparseVector::unit(i);
    SparseVector col;
    for (Index b = 0; b < d; ++b) {
      SparseVector bv = SparseVector::unit(b);
      SparseVector comm = product(a, z, bv).minus(f, product(a, bv, z));
      col = col.plus(f, comm.shifted(b * d));
    }
    m.set_column(i, std::move(col));
  }
  return m.kernel();
}

DerivationSpaces oracle_derivations(const MonomialAlgebra& a) {
  const Quiver& q = a.quiver();
  const Field& f = a.field();
  const std::size_t d = a.dim();
  const std::size_t nv = q.vertex_count();

  // Generators: vertices, then arrows.
  std::vector<Path> gens;
  for (auto v : q.vertices()) gens.push_back(Path::trivial(v));
  for (auto x : q.arrows()) gens.push_back(Path::of_arrow(q, x));
  const std::size_t ng = gens.size();
  auto gen_vec = [&](std::size_t g) { return basis_vector(a, gens[g]); };

  // A constraint is sum_k left_k * d(g_k) * right_k - d(g_out) = 0 with left/right basis paths or 1.
  struct Term {
    std::optional<Path> left;
    std::size_t gen;
    std::optional<Path> right;
  };
  struct Constraint {
    std::vector<Term> terms;
    std::optional<std::size_t> minus_gen;
  };
  std::vector<Constraint> constraints;
  auto gen_index = [&](const Path& p) -> std::optional<std::size_t> {
    auto it = std::find(gens.begin(), gens.end(), p);
    if (it == gens.end()) return std::nullopt;
    return static_cast<std::size_t>(it - gens.begin());
  };

  // x*y for generator pairs whose product is zero or again a generator.
  for (std::size_t x = 0; x < ng; ++x) {
    for (std::size_t y = 0; y < ng; ++y) {
      auto prod = a.multiply(gens[x], gens[y]);
      std::optional<std::size_t> out;
      if (prod) {
        out = gen_index(*prod);
        if (!out) continue;
      }
      Constraint c;
      c.terms.push_back(Term{std::nullopt, x, gens[y]});
      c.terms.push_back(Term{gens[x], y, std::nullopt});
      c.minus_gen = out;
      constraints.push_back(std::move(c));
    }
  }
  // 1 = sum of the vertices.
  {
    Constraint c;
    for (std::size_t v = 0; v < nv; ++v) c.terms.push_back(Term{std::nullopt, v, std::nullopt});
    constraints.push_back(std::move(c));
  }
  // Relations of length >= 3; length 2 is covered by the zero products above.
  for (const auto& r : a.relations()) {
    if (r.length() < 3) continue;
    Constraint c;
    for (std::size_t i = 0; i < r.length(); ++i) {
      std::optional<Path> earlier, later;
      if (i > 0) earlier = r.subpath(q, 0, i);
      if (i + 1 < r.length()) later = r.subpath(q, i + 1, r.length() - i - 1);
      c.terms.push_back(Term{later, nv + r.arrows()[i].value, earlier});
    }
    constraints.push_back(std::move(c));
  }

  auto sandwich = [&](const std::optional<Path>& left, const SparseVector& mid, const std::optional<Path>& right) {
    SparseVector v = mid;
    if (right) v = product(a, v, basis_vector(a, *right));
    if (left) v = product(a, basis_vector(a, *left), v);
    return v;
  };

  const std::size_t unknowns = ng * d;
  LinearMap system(f, unknowns, constraints.size() * d);
  for (std::size_t g = 0; g < ng; ++g) {
    for (Index b = 0; b < d; ++b) {
      SparseVector val = SparseVector::unit(b);
      SparseVector col;
      for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
        const auto& c = constraints[ci];
        SparseVector part;
        for (const auto& t : c.terms) {
          if (t.gen == g) part = part.plus(f, sandwich(t.left, val, t.right));
        }
        if (c.minus_gen && *c.minus_gen == g) part = part.minus(f, val);
        if (!part.is_zero()) col = col.plus(f, part.shifted(ci * d));
      }
      system.set_column(g * d + b, std::move(col));
    }
  }

  Subspace inner(f, unknowns);
  for (Index z = 0; z < d; ++z) {
    SparseVector zv = SparseVector::unit(z);
    SparseVector col;
    for (std::size_t g = 0; g < ng; ++g) {
      SparseVector comm = product(a, zv, gen_vec(g)).minus(f, product(a, gen_vec(g), zv));
      col = col.plus(f, comm.shifted(g * d));
    }
    inner.insert(std::move(col));
  }
  return DerivationSpaces{system.kernel().dim(), inner.dim()};
}

std::size_t oracle_hh1_dim(const MonomialAlgebra& a) {
  auto s = oracle_derivations(a);
  return s.der - s.inner;
}

// ---- checks --------------------------------------------------------------

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
    case CheckStatus::assumption_violated: return "assumption-violated";
  }
  return "unknown";
}

namespace {

struct Ctx {
  const GluingAnalysis& an;
  const GluedAlgebra& g;
  const StrametzComplex& ca;
  const StrametzComplex& cb;
  const Field& f;
  long c_a;
  long c_b;
  GluingKind kind;
};

std::string num(long v) { return std::to_string(v); }
std::string num(std::size_t v) { return std::to_string(v); }
std::string flag(bool b) { return b ? "true" : "false"; }

void detail(CheckReport& r, std::string key, std::string value) { r.details.emplace_back(std::move(key), std::move(value)); }

void verdict(CheckReport& r, bool ok) { r.status = ok ? CheckStatus::pass : CheckStatus::fail; }

void not_applicable(CheckReport& r, std::string reason) {
  r.status = CheckStatus::not_applicable;
  r.reason = std::move(reason);
}

long sl(std::size_t v) { return static_cast<long>(v); }

Subspace line(const Field& f, std::size_t ambient, const SparseVector& v) {
  return Subspace::span(f, ambient, {v});
}

// Returns false (and fills the report) when the Assumption on loops fails for a gluing that needs it.
bool assumption_ok(const Ctx& c, CheckReport& r) {
  if (c.kind.source_sink) return true;
  auto as = c.an.assumption();
  if (as.holds) return true;
  r.status = CheckStatus::assumption_violated;
  r.witness = "(" + c.g.a().quiver().arrow(as.witness->first).name + ", " + num(as.witness->second) + ")";
  r.reason = "a loop power in the relations has exponent divisible by the characteristic";
  return false;
}

const char* need_source_sink = "requires alpha to be a source arrow and beta a sink arrow";

void im_delta0_dim(const Ctx& c, CheckReport& r) {
  const std::size_t sp = c.an.special_paths().sp;
  const long lhs = sl(c.ca.im_delta0().dim());
  const long rhs = sl(c.cb.im_delta0().dim()) + 2 + c.c_b - c.c_a - sl(sp);
  r.lhs = num(lhs);
  r.rhs = num(rhs);
  detail(r, "dim Im d0_A", num(c.ca.im_delta0().dim()));
  detail(r, "dim Im d0_B", num(c.cb.im_delta0().dim()));
  detail(r, "sp", num(sp));
  detail(r, "c_A", num(c.c_a));
  detail(r, "c_B", num(c.c_b));
  verdict(r, lhs == rhs);
}

void im_delta0_structure(const Ctx& c, CheckReport& r) {
  if (!c.kind.source_sink) return not_applicable(r, need_source_sink);
  const Subspace& im_a = c.ca.im_delta0();
  const Subspace& im_b = c.cb.im_delta0();
  Subspace psi_im = c.an.psi1().apply(im_a);
  auto sp = c.an.special_paths();
  Subspace left = im_b;
  left.insert(c.an.gamma_pair());
  Subspace right = sum(psi_im, sp.z_sp);
  const bool direct = is_direct_sum(psi_im, sp.z_sp);
  const bool kernel = c.an.psi1().kernel_on(im_a) == line(c.f, im_a.ambient_dim(), c.an.alpha_minus_beta());
  const bool gamma_in = im_b.contains(c.an.gamma_pair());
  bool refinement = c.kind.same_block ? !gamma_in : im_b == psi_im;
  r.lhs = num(left.dim());
  r.rhs = num(psi_im.dim() + sp.z_sp.dim());
  detail(r, "dim psi1(Im d0_A)", num(psi_im.dim()));
  detail(r, "sp", num(sp.sp));
  detail(r, "spans equal", flag(left == right));
  detail(r, "direct sum", flag(direct));
  detail(r, "kernel is <alpha||alpha - beta||beta>", flag(kernel));
  detail(r, c.kind.same_block ? "gamma*||gamma* outside Im d0_B" : "Im d0_B = psi1(Im d0_A)", flag(refinement));
  verdict(r, left == right && direct && kernel && refinement);
}

void rad_sq_zero_im(const Ctx& c, CheckReport& r) {
  if (!c.kind.source_sink) return not_applicable(r, need_source_sink);
  if (!c.g.a().is_radical_square_zero()) return not_applicable(r, "A is not radical square zero");
  Subspace psi_im = c.an.psi1().apply(c.ca.im_delta0());
  Subspace left = c.cb.im_delta0();
  left.insert(c.an.gamma_pair());
  const long lhs = sl(c.ca.im_delta0().dim());
  const long rhs = sl(c.cb.im_delta0().dim()) + 2 + c.c_b - c.c_a;
  r.lhs = num(lhs);
  r.rhs = num(rhs);
  detail(r, "<Im d0_B, gamma*||gamma*> = psi1(Im d0_A)", flag(left == psi_im));
  verdict(r, left == psi_im && lhs == rhs);
}

void ker_delta1_hom(const Ctx& c, CheckReport& r) {
  if (!assumption_ok(c, r)) return;
  const Subspace& ker_a = c.ca.ker_delta1();
  const LinearMap& psi = c.an.psi1();
  Subspace img = psi.apply(ker_a);
  const bool into = c.cb.ker_delta1().contains(img);
  const bool kernel = psi.kernel_on(ker_a) == line(c.f, ker_a.ambient_dim(), c.an.alpha_minus_beta());
  const auto& rows = ker_a.rows();
  std::size_t bad = 0;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      ++checked;
      SparseVector lhs = psi.apply(c.ca.bracket(rows[i], rows[j]));
      SparseVector rhs = c.cb.bracket(psi.apply(rows[i]), psi.apply(rows[j]));
      if (lhs != rhs) {
        if (bad == 0) r.witness = "basis pair (" + num(i) + ", " + num(j) + ")";
        ++bad;
      }
    }
  }
  r.lhs = num(img.dim());
  r.rhs = num(sl(ker_a.dim()) - 1);
  detail(r, "image inside Ker d1_B", flag(into));
  detail(r, "kernel is <alpha||alpha - beta||beta>", flag(kernel));
  detail(r, "bracket pairs checked", num(checked));
  detail(r, "bracket mismatches", num(bad));
  verdict(r, into && kernel && bad == 0);
}

void ker_delta1_structure(const Ctx& c, CheckReport& r) {
  if (!assumption_ok(c, r)) return;
  const Subspace& ker_a = c.ca.ker_delta1();
  const Subspace& ker_b = c.cb.ker_delta1();
  Subspace img = c.an.psi1().apply(ker_a);
  auto spp = c.an.special_pairs();
  const bool decomposes = ker_b == sum(img, spp.z_spp);
  const bool direct = is_direct_sum(img, spp.z_spp);
  const long lhs = sl(ker_b.dim());
  const long rhs = sl(ker_a.dim()) - 1 + sl(spp.kspp);
  bool ss_ok = true;
  if (c.kind.source_sink) {
    ss_ok = spp.z_spp == c.an.special_paths().z_sp;
    detail(r, "Z_spp = Z_sp", flag(ss_ok));
  }
  r.lhs = num(lhs);
  r.rhs = num(rhs);
  detail(r, "dim Ker d1_A", num(ker_a.dim()));
  detail(r, "dim Ker d1_B", num(ker_b.dim()));
  detail(r, "kspp", num(spp.kspp));
  detail(r, "Ker d1_B = psi1(Ker d1_A) + Z_spp", flag(decomposes));
  detail(r, "direct sum", flag(direct));
  verdict(r, decomposes && direct && lhs == rhs && img.dim() + 1 == ker_a.dim() && ss_ok);
}

void hh1_lie_iso(const Ctx& c, CheckReport& r) {
  if (!c.kind.source_sink) return not_applicable(r, need_source_sink);
  const LinearMap& psi = c.an.psi1();
  const Subspace& im_b = c.cb.im_delta0();
  const Subspace& ker_b = c.cb.ker_delta1();
  Subspace y = sum(psi.apply(c.ca.im_delta0()), c.an.special_paths().z_sp);
  Subspace expected_y = im_b;
  if (c.kind.same_block) expected_y.insert(c.an.gamma_pair());
  const bool y_ok = y == expected_y && ker_b.contains(y);

  // Basis of HH1(A) is aligned with its image under psi1.
  const auto& reps = c.ca.hh1_representatives().rows();
  std::vector<SparseVector> images;
  for (const auto& b : reps) images.push_back(psi.apply(b));
  Subspace spanned = y;
  for (const auto& v : images) spanned.insert(v);
  const bool bijective = spanned.dim() == y.dim() + images.size() && spanned == ker_b;

  // With psi1(Im d0_A) inside Y, equal structure constants in the aligned bases
  // amount to psi1[x_i, x_j] - [psi1 x_i, psi1 x_j] lying in Y.
  std::size_t bad = 0;
  if (bijective) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        const SparseVector lhs = psi.apply(c.ca.bracket(reps[i], reps[j]));
        if (!y.contains(lhs.minus(c.f, c.cb.bracket(images[i], images[j])))) {
          if (bad == 0) r.witness = "basis pair (" + num(i) + ", " + num(j) + ")";
          ++bad;
        }
      }
    }
  }
  const std::size_t dim_i = y.dim() - im_b.dim();
  r.lhs = num(c.ca.hh1_dim());
  r.rhs = num(sl(c.cb.hh1_dim()) - sl(dim_i));
  detail(r, "dim I", num(dim_i));
  detail(r, "Y as expected", flag(y_ok));
  detail(r, "induced map bijective", flag(bijective));
  detail(r, "structure constant mismatches", num(bad));
  verdict(r, y_ok && bijective && bad == 0);
}

void hh1_central_summand(const Ctx& c, CheckReport& r) {
  if (!c.kind.source_sink) return not_applicable(r, need_source_sink);
  if (!c.kind.same_block) return not_applicable(r, "the glued arrows lie in different blocks");
  if (!c.f.is_rational()) return not_applicable(r, "requires characteristic zero");
  const Subspace& im_b = c.cb.im_delta0();
  const SparseVector gg = c.an.gamma_pair();
  const bool outside = !im_b.contains(gg);
  std::size_t noncentral = 0;
  for (const auto& rep : c.cb.hh1_representatives().rows()) {
    if (!im_b.contains(c.cb.bracket(gg, rep))) ++noncentral;
  }
  r.lhs = num(c.cb.hh1_dim());
  r.rhs = num(c.ca.hh1_dim() + 1);
  detail(r, "gamma*||gamma* outside Im d0_B", flag(outside));
  detail(r, "classes not commuting with gamma*||gamma*", num(noncentral));
  verdict(r, outside && noncentral == 0 && c.cb.hh1_dim() == c.ca.hh1_dim() + 1);
}

void hh1_dim_general(const Ctx& c, CheckReport& r) {
  if (!assumption_ok(c, r)) return;
  const std::size_t kspp = c.an.special_pairs().kspp;
  const std::size_t sp = c.an.special_paths().sp;
  const long lhs = sl(c.ca.hh1_dim());
  const long rhs = sl(c.cb.hh1_dim()) - 1 - sl(kspp) + sl(sp) + c.c_a - c.c_b;
  r.lhs = num(lhs);
  r.rhs = num(rhs);
  detail(r, "dim HH1(A)", num(c.ca.hh1_dim()));
  detail(r, "dim HH1(B)", num(c.cb.hh1_dim()));
  detail(r, "kspp", num(kspp));
  detail(r, "sp", num(sp));
  detail(r, "c_A", num(c.c_a));
  detail(r, "c_B", num(c.c_b));
  verdict(r, lhs == rhs);
}

void rad_sq_zero_summand(const Ctx& c, CheckReport& r) {
  if (!c.g.a().is_radical_square_zero()) return not_applicable(r, "A is not radical square zero");
  if (!c.kind.same_block) return not_applicable(r, "the glued arrows lie in different blocks");
  if (!c.f.is_rational()) return not_applicable(r, "requires characteristic zero");
  const std::size_t kspp = c.an.special_pairs().kspp;
  if (kspp != 0) return not_applicable(r, "Z_spp is not zero");
  const std::size_t za = lie_center_dim(c.f, c.ca.hh1_lie());
  const std::size_t zb = lie_center_dim(c.f, c.cb.hh1_lie());
  r.lhs = num(c.cb.hh1_dim());
  r.rhs = num(c.ca.hh1_dim() + 1);
  detail(r, "dim center HH1(A)", num(za));
  detail(r, "dim center HH1(B)", num(zb));
  verdict(r, c.cb.hh1_dim() == c.ca.hh1_dim() + 1 && zb == za + 1);
}

void center_geq1(const Ctx& c, CheckReport& r) {
  Subspace ka = c.ca.ker_delta0_positive();
  Subspace kb = c.cb.ker_delta0_positive();
  Subspace img = c.an.psi0().apply(ka);
  const bool injective = c.an.psi0().kernel_on(ka).dim() == 0;
  auto nsp = c.an.nsp_data();
  const bool decomposes = kb == sum(img, nsp.z_nsp);
  const bool direct = is_direct_sum(img, nsp.z_nsp);
  const bool dims = c.kind.same_block ? kb.dim() == ka.dim() + nsp.nsp : kb.dim() == ka.dim();
  r.lhs = num(kb.dim());
  r.rhs = num(ka.dim() + nsp.nsp);
  detail(r, "nsp", num(nsp.nsp));
  detail(r, "psi0 injective", flag(injective));
  detail(r, "decomposition", flag(decomposes));
  detail(r, "direct sum", flag(direct));
  verdict(r, injective && decomposes && direct && dims);
}

// Product of two center elements given in k(Q0||B).
SparseVector center_mul(const StrametzComplex& c, const SparseVector& x, const SparseVector& y) {
  return c.algebra_to_center(c.multiply(c.center_to_algebra(x), c.center_to_algebra(y)));
}

SparseVector unit_of(const StrametzComplex& c) {
  std::vector<std::pair<Index, Scalar>> e;
  for (auto v : c.algebra().quiver().vertices()) {
    e.emplace_back(c.q0().require({Path::trivial(v), Path::trivial(v)}), Scalar(1));
  }
  return SparseVector(c.field(), std::move(e));
}

// Splits z into (coefficient of the unit, part supported on paths of length >= 1).
// Returns nullopt when the trivial part is not a multiple of the unit.
std::optional<std::pair<Scalar, SparseVector>> split_center(const StrametzComplex& c, const SparseVector& z) {
  std::optional<Scalar> lambda;
  std::vector<std::pair<Index, Scalar>> rest;
  std::size_t trivial_terms = 0;
  for (const auto& [i, v] : z.entries()) {
    if (c.q0().at(i).right.is_trivial()) {
      ++trivial_terms;
      if (lambda && *lambda != v) return std::nullopt;
      lambda = v;
    } else {
      rest.emplace_back(i, v);
    }
  }
  if (trivial_terms != 0 && trivial_terms != c.algebra().quiver().vertex_count()) return std::nullopt;
  return std::make_pair(lambda.value_or(Scalar(0)), SparseVector(c.field(), std::move(rest)));
}

void center_indec(const Ctx& c, CheckReport& r) {
  if (c.c_a != 1) return not_applicable(r, "A is not indecomposable");
  const Subspace& za = c.ca.hh0();
  const Subspace& zb = c.cb.hh0();
  const std::size_t nsp = c.an.nsp_data().nsp;
  const SparseVector unit_b = unit_of(c.cb);
  auto mu = [&](const SparseVector& z) -> std::optional<SparseVector> {
    auto parts = split_center(c.ca, z);
    if (!parts) return std::nullopt;
    return c.an.psi0().apply(parts->second).plus(c.f, unit_b.scaled(c.f, parts->first));
  };
  bool ok_map = true;
  std::vector<SparseVector> images;
  for (const auto& z : za.rows()) {
    auto m = mu(z);
    if (!m || !zb.contains(*m)) {
      ok_map = false;
      break;
    }
    images.push_back(*m);
  }
  bool injective = ok_map && Subspace::span(c.f, zb.ambient_dim(), images).dim() == za.dim();
  bool multiplicative = ok_map;
  for (std::size_t i = 0; multiplicative && i < za.dim(); ++i) {
    for (std::size_t j = i; j < za.dim(); ++j) {
      auto lhs = mu(center_mul(c.ca, za.rows()[i], za.rows()[j]));
      if (!lhs || *lhs != center_mul(c.cb, images[i], images[j])) {
        multiplicative = false;
        r.witness = "basis pair (" + num(i) + ", " + num(j) + ")";
        break;
      }
    }
  }
  const bool unital = ok_map && mu(unit_of(c.ca)) == std::optional<SparseVector>(unit_b);
  r.lhs = num(zb.dim());
  r.rhs = num(za.dim() + nsp);
  detail(r, "dim Z(A)", num(za.dim()));
  detail(r, "dim Z(B)", num(zb.dim()));
  detail(r, "nsp", num(nsp));
  detail(r, "injective", flag(injective));
  detail(r, "multiplicative", flag(multiplicative));
  detail(r, "unital", flag(unital));
  verdict(r, zb.dim() == za.dim() + nsp && injective && multiplicative && unital);
}

void center_source_sink(const Ctx& c, CheckReport& r) {
  if (!c.kind.source_sink) return not_applicable(r, need_source_sink);
  if (c.c_a != 1) return not_applicable(r, "A is not indecomposable");
  const auto paths = c.g.a().path_set(c.g.en1(), c.g.e2());
  if (!paths.empty()) return not_applicable(r, "there are basis paths from e2 to e_{n-1}");
  r.lhs = num(c.cb.hh0().dim());
  r.rhs = num(c.ca.hh0().dim());
  detail(r, "nsp", num(c.an.nsp_data().nsp));
  verdict(r, c.cb.hh0().dim() == c.ca.hh0().dim());
}

void center_rad_sq_zero(const Ctx& c, CheckReport& r) {
  if (!c.g.a().is_radical_square_zero()) return not_applicable(r, "A is not radical square zero");
  if (c.c_a != 1) return not_applicable(r, "A is not indecomposable");
  const Quiver& q = c.g.a().quiver();
  auto joins = [&](ArrowId x, VertexId u, VertexId v) {
    return (q.source(x) == u && q.target(x) == v) || (q.source(x) == v && q.target(x) == u);
  };
  std::size_t between = 0;
  for (auto x : q.arrows()) {
    if (joins(x, c.g.e1(), c.g.en1()) || joins(x, c.g.e2(), c.g.en())) ++between;
  }
  const bool iso = c.ca.hh0().dim() == c.cb.hh0().dim();
  r.lhs = "Z(A) = Z(B): " + flag(iso);
  r.rhs = "no arrows between glued pairs: " + flag(between == 0);
  detail(r, "dim Z(A)", num(c.ca.hh0().dim()));
  detail(r, "dim Z(B)", num(c.cb.hh0().dim()));
  detail(r, "arrows between glued pairs", num(between));
  verdict(r, iso == (between == 0));
}

void center_diff_blocks(const Ctx& c, CheckReport& r) {
  if (c.kind.same_block) return not_applicable(r, "the glued arrows lie in one block");
  if (c.c_a != 2) return not_applicable(r, "A does not have exactly two blocks");
  Subspace ka = c.ca.ker_delta0_positive();
  Subspace kb = c.cb.ker_delta0_positive();
  const LinearMap& psi = c.an.psi0();
  const bool iso_positive = psi.apply(ka) == kb && psi.kernel_on(ka).dim() == 0;
  bool multiplicative = true;
  for (std::size_t i = 0; multiplicative && i < ka.dim(); ++i) {
    for (std::size_t j = i; j < ka.dim(); ++j) {
      const auto& x = ka.rows()[i];
      const auto& y = ka.rows()[j];
      if (psi.apply(center_mul(c.ca, x, y)) != center_mul(c.cb, psi.apply(x), psi.apply(y))) {
        multiplicative = false;
        r.witness = "basis pair (" + num(i) + ", " + num(j) + ")";
        break;
      }
    }
  }
  r.lhs = num(c.ca.hh0().dim());
  r.rhs = num(c.cb.hh0().dim() + 1);
  detail(r, "positive parts identified by psi0", flag(iso_positive));
  detail(r, "multiplicative", flag(multiplicative));
  verdict(r, c.ca.hh0().dim() == c.cb.hh0().dim() + 1 && iso_positive && multiplicative);
}

void pi1_rank_check(const Ctx& c, CheckReport& r) {
  const long lhs = sl(pi1_rank(c.g.a()));
  const long rhs = sl(pi1_rank(c.g.b())) + c.c_a - c.c_b - 1;
  r.lhs = num(lhs);
  r.rhs = num(rhs);
  verdict(r, lhs == rhs);
}

void gamma_not_in_image(const Ctx& c, CheckReport& r) {
  if (!c.kind.source_sink) return not_applicable(r, need_source_sink);
  if (!c.kind.same_block) return not_applicable(r, "the glued arrows lie in different blocks");
  const bool member = c.cb.im_delta0().contains(c.an.gamma_pair());
  r.lhs = "gamma*||gamma* in Im d0_B: " + flag(member);
  r.rhs = "gamma*||gamma* in Im d0_B: false";
  verdict(r, !member);
}

void theta_diagram(const Ctx& c, CheckReport& r) {
  auto t = check_theta_diagram(c.an);
  if (!t.applicable) return not_applicable(r, t.reason);
  std::size_t good = 0;
  for (const auto& gen : t.generators) good += gen.commutes ? 1 : 0;
  r.lhs = num(good + (t.left_square ? 1 : 0));
  r.rhs = num(t.generators.size() + 1);
  detail(r, "walk v", t.walk_v);
  detail(r, "theta_B(g*) = gamma*||gamma*", flag(t.left_square));
  for (const auto& gen : t.generators) detail(r, "chord " + gen.chord, flag(gen.commutes));
  verdict(r, t.commutes());
}

std::string format_dim(const HighDegreeDim& d) { return d.crown ? std::string("crown") : d.value.get_str(); }

void high_degrees(const Ctx& c, CheckReport& r) {
  auto h = check_high_degree_gluing(c.g, 12, 20000);
  if (!h.applicable) return not_applicable(r, h.reason);
  std::string lhs, rhs;
  for (const auto& e : h.entries) {
    lhs += (lhs.empty() ? "" : ",") + format_dim(e.dim_b);
    rhs += (rhs.empty() ? "" : ",") + format_dim(e.dim_a);
    std::string inj = e.psi_injective ? flag(*e.psi_injective) : "skipped";
    detail(r, "n=" + num(e.degree), format_dim(e.dim_a) + " -> " + format_dim(e.dim_b) + ", psi injective " + inj);
  }
  r.lhs = "dim HH^n(B), n=2..: " + lhs;
  r.rhs = "dim HH^n(A), n=2..: " + rhs;
  verdict(r, h.holds());
}

using CheckFn = void (*)(const Ctx&, CheckReport&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table{
      {"im_delta0_dim", im_delta0_dim},
      {"im_delta0_structure", im_delta0_structure},
      {"rad_sq_zero_im", rad_sq_zero_im},
      {"ker_delta1_hom", ker_delta1_hom},
      {"ker_delta1_structure", ker_delta1_structure},
      {"hh1_lie_iso", hh1_lie_iso},
      {"hh1_central_summand", hh1_central_summand},
      {"hh1_dim_general", hh1_dim_general},
      {"rad_sq_zero_summand", rad_sq_zero_summand},
      {"center_geq1", center_geq1},
      {"center_indec", center_indec},
      {"center_source_sink", center_source_sink},
      {"center_rad_sq_zero", center_rad_sq_zero},
      {"center_diff_blocks", center_diff_blocks},
      {"pi1_rank", pi1_rank_check},
      {"gamma_not_in_image", gamma_not_in_image},
      {"theta_diagram", theta_diagram},
      {"high_degrees", high_degrees},
  };
  return table;
}

std::string reproduction(const GluedAlgebra& g) {
  const Quiver& q = g.a().quiver();
  return print_algebra(g.a()) + "# glue " + q.arrow(g.alpha()).name + " " + q.arrow(g.beta()).name + "\n";
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

CheckReport run_check(const std::string& id, const GluingAnalysis& an) {
  const auto& table = registry();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == id; });
  if (it == table.end()) throw Error("unknown check '" + id + "'");
  const GluedAlgebra& g = an.gluing();
  Ctx ctx{an,
          g,
          an.complex_a(),
          an.complex_b(),
          an.complex_a().field(),
          static_cast<long>(connected_components(g.a().quiver()).count),
          static_cast<long>(connected_components(g.b().quiver()).count),
          an.kind()};
  CheckReport r;
  r.check = id;
  const auto start = std::chrono::steady_clock::now();
  it->second(ctx, r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.status == CheckStatus::fail) r.reproduction = reproduction(g);
  return r;
}

std::vector<CheckReport> run_checks(const GluingAnalysis& an, const std::vector<std::string>& ids) {
  std::vector<CheckReport> out;
  for (const auto& id : ids.empty() ? check_ids() : ids) out.push_back(run_check(id, an));
  return out;
}

// ---- random instances ----------------------------------------------------

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(gen_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return hi <= lo ? lo : lo + below(hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(gen_() % 1000000) < p * 1000000.0; }

 private:
  std::mt19937_64 gen_;
};

// Connected random block: a random spanning tree plus extra arrows (loops allowed).
std::vector<VertexId> add_block(Quiver& q, Rng& rng, std::size_t nv, std::size_t max_arrows, const std::string& prefix) {
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < nv; ++i) vs.push_back(q.add_vertex(prefix + "v" + std::to_string(i)));
  std::size_t arrows = 0;
  auto name = [&] { return prefix + "a" + std::to_string(arrows++); };
  for (std::size_t i = 1; i < nv && arrows < max_arrows; ++i) {
    VertexId u = vs[rng.below(i)];
    if (rng.chance(0.5)) {
      q.add_arrow(name(), u, vs[i]);
    } else {
      q.add_arrow(name(), vs[i], u);
    }
  }
  const std::size_t extra = max_arrows > arrows ? rng.below(max_arrows - arrows + 1) : 0;
  for (std::size_t k = 0; k < extra; ++k) q.add_arrow(name(), vs[rng.below(nv)], vs[rng.below(nv)]);
  return vs;
}

std::vector<Path> all_paths(const Quiver& q, std::size_t min_len, std::size_t max_len, std::size_t cap) {
  std::vector<Path> out;
  std::vector<ArrowId> cur;
  std::function<void(VertexId)> go = [&](VertexId at) {
    if (out.size() >= cap) return;
    if (cur.size() >= min_len) out.push_back(Path::of_arrows(q, cur));
    if (cur.size() == max_len) return;
    for (auto a : q.out_arrows(at)) {
      cur.push_back(a);
      go(q.target(a));
      cur.pop_back();
    }
  };
  for (auto a : q.arrows()) {
    cur = {a};
    go(q.target(a));
  }
  return out;
}

MonomialAlgebra with_random_relations(const Quiver& q, Rng& rng, const RandomSpec& spec) {
  const std::size_t max_len = std::max<std::size_t>(2, spec.max_relation_length);
  const auto candidates = all_paths(q, 2, max_len, 4000);
  BuildOptions opts;
  opts.drop_superset_relations = true;
  opts.max_basis_size = 5000;
  constexpr int attempts = 6;
  for (int k = 0; k < attempts; ++k) {
    const double density = spec.relation_density + (1.0 - spec.relation_density) * k / attempts;
    std::vector<Path> rels;
    for (const auto& p : candidates) {
      if (rng.chance(density)) rels.push_back(p);
    }
    try {
      return MonomialAlgebra::build(q, std::move(rels), spec.field, opts);
    } catch (const DimensionError&) {
      // infinite or too large: resample with more relations
    }
  }
  return MonomialAlgebra::build(q, all_paths(q, 2, 2, 1000000), spec.field, opts);
}

}  // namespace

MonomialAlgebra random_instance(const RandomSpec& spec) {
  Rng rng(spec.seed);
  Quiver q;
  const std::size_t nv = rng.between(std::max<std::size_t>(1, spec.min_vertices), std::max(spec.min_vertices, spec.max_vertices));
  add_block(q, rng, nv, spec.max_arrows, "");
  return with_random_relations(q, rng, spec);
}

std::optional<GluingSpec> random_gluing(const MonomialAlgebra& a, std::uint64_t seed) {
  const Quiver& q = a.quiver();
  std::vector<GluingSpec> candidates;
  for (auto x : q.arrows()) {
    for (auto y : q.arrows()) {
      if (x == y || q.is_loop(x) || q.is_loop(y)) continue;
      std::vector<VertexId> ends{q.source(x), q.target(x), q.source(y), q.target(y)};
      std::sort(ends.begin(), ends.end());
      if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) continue;
      candidates.push_back(GluingSpec{x, y});
    }
  }
  if (candidates.empty()) return std::nullopt;
  Rng rng(seed);
  return candidates[rng.below(candidates.size())];
}

std::string to_string(FuzzMode m) {
  switch (m) {
    case FuzzMode::generic: return "generic";
    case FuzzMode::source_sink: return "source-sink";
    case FuzzMode::two_block: return "two-block";
  }
  return "unknown";
}

namespace {

std::optional<ArrowId> random_non_loop(const Quiver& q, const std::vector<VertexId>& block, Rng& rng) {
  std::vector<ArrowId> xs;
  for (auto a : q.arrows()) {
    if (q.is_loop(a)) continue;
    if (std::find(block.begin(), block.end(), q.source(a)) != block.end()) xs.push_back(a);
  }
  if (xs.empty()) return std::nullopt;
  return xs[rng.below(xs.size())];
}

FuzzInstance source_sink_instance(Rng& rng, const RandomSpec& shape) {
  Quiver q;
  const std::size_t core_max = shape.max_vertices > 3 ? shape.max_vertices - 2 : 1;
  auto core = add_block(q, rng, rng.between(1, core_max), shape.max_arrows, "");
  VertexId s1 = q.add_vertex("s1");
  VertexId s2 = q.add_vertex("s2");
  VertexId t1 = q.add_vertex("t1");
  VertexId t2 = q.add_vertex("t2");
  ArrowId alpha = q.add_arrow("alpha", s1, s2);
  ArrowId beta = q.add_arrow("beta", t1, t2);
  const std::size_t outs = rng.between(1, 2);
  for (std::size_t i = 0; i < outs; ++i) q.add_arrow("x" + std::to_string(i), s2, core[rng.below(core.size())]);
  const std::size_t ins = rng.between(1, 2);
  for (std::size_t i = 0; i < ins; ++i) q.add_arrow("y" + std::to_string(i), core[rng.below(core.size())], t1);
  if (rng.chance(0.25)) q.add_arrow("z", s2, t1);
  if (rng.chance(0.3)) {
    auto a = MonomialAlgebra::build(q, all_paths(q, 2, 2, 1000000), shape.field, BuildOptions{true, 5000});
    return FuzzInstance{std::move(a), GluingSpec{alpha, beta}, FuzzMode::source_sink};
  }
  auto a = with_random_relations(q, rng, shape);
  return FuzzInstance{std::move(a), GluingSpec{alpha, beta}, FuzzMode::source_sink};
}

}  // namespace

FuzzInstance random_fuzz_instance(std::uint64_t seed, FuzzMode mode, const RandomSpec& shape) {
  Rng rng(seed);
  if (mode == FuzzMode::generic) {
    for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
      RandomSpec s = shape;
      s.seed = seed * 1000003ULL + attempt;
      s.min_vertices = std::max<std::size_t>(4, shape.min_vertices);
      s.max_vertices = std::max<std::size_t>(s.min_vertices, shape.max_vertices);
      s.max_arrows = std::max<std::size_t>(s.max_vertices, shape.max_arrows);
      auto a = random_instance(s);
      if (auto g = random_gluing(a, seed ^ 0x9e3779b97f4a7c15ULL)) {
        return FuzzInstance{std::move(a), *g, FuzzMode::generic};
      }
    }
    return source_sink_instance(rng, shape);
  }
  if (mode == FuzzMode::source_sink) return source_sink_instance(rng, shape);

  Quiver q;
  const std::size_t max_v = std::max<std::size_t>(2, shape.max_vertices / 2 + 1);
  const std::size_t max_a = std::max<std::size_t>(1, shape.max_arrows / 2 + 1);
  auto b1 = add_block(q, rng, rng.between(2, max_v), max_a, "p");
  auto b2 = add_block(q, rng, rng.between(2, max_v), max_a, "q");
  ArrowId alpha = *random_non_loop(q, b1, rng);
  ArrowId beta = *random_non_loop(q, b2, rng);
  auto a = with_random_relations(q, rng, shape);
  return FuzzInstance{std::move(a), GluingSpec{alpha, beta}, FuzzMode::two_block};
}

std::size_t FuzzSummary::count(const std::string& check, CheckStatus s) const {
  auto it = counts.find(check);
  if (it == counts.end()) return 0;
  auto jt = it->second.find(s);
  return jt == it->second.end() ? 0 : jt->second;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  FuzzSummary out;
  const std::vector<std::string>& ids = options.checks.empty() ? check_ids() : options.checks;
  for (std::size_t i = 0; i < options.count; ++i) {
    RandomSpec shape = options.shape;
    shape.field = options.fields.empty() ? Field::rationals() : options.fields[i % options.fields.size()];
    const auto mode = static_cast<FuzzMode>(i % 3);
    auto inst = random_fuzz_instance(options.seed + i, mode, shape);
    ++out.instances;
    try {
      GluingAnalysis an(glue(inst.algebra, inst.gluing.alpha, inst.gluing.beta));
      for (const auto& id : ids) {
        auto r = run_check(id, an);
        ++out.counts[id][r.status];
        if (r.status == CheckStatus::fail) out.failures.push_back(std::move(r));
      }
    } catch (const Error& e) {
      CheckReport r;
      r.check = "construction";
      r.status = CheckStatus::fail;
      r.reason = e.what();
      const Quiver& q = inst.algebra.quiver();
      r.reproduction = print_algebra(inst.algebra) + "# glue " + q.arrow(inst.gluing.alpha).name + " " +
                       q.arrow(inst.gluing.beta).name + "\n";
      ++out.counts[r.check][r.status];
      out.failures.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace hochglue
