#include "hochglue/gluing.hpp"

#include <algorithm>
#include <set>

#include "hochglue/errors.hpp"

namespace hochglue {

Path GluedAlgebra::path_map(const Path& p) const {
  if (p.is_trivial()) return Path::trivial(vertex_map(p.source()));
  std::vector<ArrowId> arrows;
  arrows.reserve(p.length());
  for (auto a : p.arrows()) arrows.push_back(arrow_map(a));
  return Path::of_arrows(b_.quiver(), std::move(arrows));
}

std::vector<Path> GluedAlgebra::preimages(const Path& p) const {
  const Quiver& qa = a_.quiver();
  std::vector<Path> out;
  if (p.is_trivial()) {
    for (auto v : qa.vertices()) {
      if (vertex_map(v) == p.source()) out.push_back(Path::trivial(v));
    }
    return out;
  }
  std::vector<std::vector<ArrowId>> choices(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (auto a : qa.arrows()) {
      if (arrow_map(a) == p.arrows()[i]) choices[i].push_back(a);
    }
  }
  std::vector<ArrowId> current;
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == p.length()) {
      out.push_back(Path::of_arrows(qa, current));
      return;
    }
    for (auto a : choices[i]) {
      if (!current.empty() && qa.target(current.back()) != qa.source(a)) continue;
      current.push_back(a);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void validate(const Quiver& q, ArrowId alpha, ArrowId beta) {
  if (alpha.value >= q.arrow_count() || beta.value >= q.arrow_count()) {
    throw GluingError("gluing arrow out of range");
  }
  if (alpha == beta) throw GluingError("cannot glue an arrow with itself");
  if (q.is_loop(alpha) || q.is_loop(beta)) {
    throw GluingError("loop gluing is not supported: the four endpoint vertices must be pairwise different");
  }
  std::set<VertexId> ends{q.source(alpha), q.target(alpha), q.source(beta), q.target(beta)};
  if (ends.size() != 4) {
    throw GluingError("arrows '" + q.arrow(alpha).name + "' and '" + q.arrow(beta).name +
                      "' share a vertex: the four endpoint vertices must be pairwise different");
  }
}

// Drops every word that contains another word of the set.
std::vector<Path> minimalize(std::vector<Path> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<Path> out;
  for (const auto& w : words) {
    bool redundant = std::any_of(words.begin(), words.end(),
                                 [&](const Path& u) { return u != w && w.contains(u); });
    if (!redundant) out.push_back(w);
  }
  return out;
}

}  // namespace

GluedAlgebra glue(const MonomialAlgebra& a, ArrowId alpha, ArrowId beta, const std::string& name) {
  const Quiver& qa = a.quiver();
  validate(qa, alpha, beta);
  const VertexId e1 = qa.source(alpha), e2 = qa.target(alpha);
  const VertexId en1 = qa.source(beta), en = qa.target(beta);

  Quiver qb;
  std::vector<VertexId> vmap(qa.vertex_count());
  for (auto v : qa.vertices()) {
    if (v == en1 || v == en) continue;
    std::string vname = qa.vertex_name(v);
    if (v == e1) vname += "+" + qa.vertex_name(en1);
    if (v == e2) vname += "+" + qa.vertex_name(en);
    if (qb.find_vertex(vname)) throw GluingError("merged vertex name '" + vname + "' is already taken");
    vmap[v.value] = qb.add_vertex(vname);
  }
  vmap[en1.value] = vmap[e1.value];
  vmap[en.value] = vmap[e2.value];

  std::vector<ArrowId> amap(qa.arrow_count());
  ArrowId gamma{};
  for (auto x : qa.arrows()) {
    if (x == beta) continue;
    if (x != alpha && qa.arrow(x).name == name) {
      throw GluingError("glued arrow name '" + name + "' is already taken");
    }
    const std::string& aname = x == alpha ? name : qa.arrow(x).name;
    amap[x.value] = qb.add_arrow(aname, vmap[qa.source(x).value], vmap[qa.target(x).value]);
    if (x == alpha) gamma = amap[x.value];
  }
  amap[beta.value] = gamma;

  auto star = [&](std::vector<ArrowId> xs) {
    for (auto& x : xs) x = amap[x.value];
    return Path::of_arrows(qb, std::move(xs));
  };
  std::vector<Path> fresh;
  // One family through (e1, e2) -> (e_{n-1}, e_n), the other in the mirrored direction.
  auto family = [&](VertexId into_first, VertexId out_second, ArrowId skip_lambda, VertexId into_mid,
                    ArrowId skip_mu, VertexId out_last) {
    for (auto eta : qa.in_arrows(into_first)) {
      for (auto lambda : qa.out_arrows(out_second)) {
        if (lambda != skip_lambda) fresh.push_back(star({eta, lambda}));
      }
      for (auto xi : qa.out_arrows(out_last)) fresh.push_back(star({eta, alpha, xi}));
    }
    for (auto mu : qa.in_arrows(into_mid)) {
      if (mu == skip_mu) continue;
      for (auto xi : qa.out_arrows(out_last)) fresh.push_back(star({mu, xi}));
    }
  };
  family(e1, en1, beta, e2, alpha, en);
  family(en1, e1, alpha, en, beta, e2);
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());

  std::vector<Path> zb = fresh;
  for (const auto& r : a.relations()) zb.push_back(star(r.arrows()));
  zb = minimalize(std::move(zb));

  MonomialAlgebra b = MonomialAlgebra::build(std::move(qb), std::move(zb), a.field());
  GluedAlgebra g(a, std::move(b));
  g.alpha_ = alpha;
  g.beta_ = beta;
  g.gamma_ = gamma;
  g.vertex_map_ = std::move(vmap);
  g.arrow_map_ = std::move(amap);
  g.z_new_ = std::move(fresh);

  if (g.b().dim() + 3 != a.dim()) {
    throw DimensionError("glued algebra has dimension " + std::to_string(g.b().dim()) + ", expected " +
                         std::to_string(a.dim() - 3));
  }
  std::set<Path> long_images;
  for (const auto& p : a.basis()) {
    if (p.length() >= 2) long_images.insert(g.path_map(p));
  }
  std::set<Path> long_b;
  for (const auto& p : g.b().basis()) {
    if (p.length() >= 2) long_b.insert(p);
  }
  if (long_images != long_b) throw DimensionError("rad^2 of the glued algebra differs from rad^2 of A");
  return g;
}

GluedAlgebra glue(const MonomialAlgebra& a, const std::string& alpha, const std::string& beta,
                  const std::string& name) {
  auto x = a.quiver().find_arrow(alpha);
  if (!x) throw GluingError("unknown arrow '" + alpha + "'");
  auto y = a.quiver().find_arrow(beta);
  if (!y) throw GluingError("unknown arrow '" + beta + "'");
  return glue(a, *x, *y, name);
}

GluingKind gluing_kind(const GluedAlgebra& g) {
  const Quiver& q = g.a().quiver();
  auto comps = connected_components(q);
  return GluingKind{is_source_arrow(q, g.alpha()) && is_sink_arrow(q, g.beta()),
                    comps.component_of[g.e1().value] == comps.component_of[g.en1().value]};
}

namespace {

LinearMap pair_map(const GluedAlgebra& g, const PairSpace& from, const PairSpace& to) {
  const Field& f = g.a().field();
  LinearMap m(f, from.size(), to.size());
  for (Index i = 0; i < from.size(); ++i) {
    const auto& pr = from.at(i);
    auto j = to.index({g.path_map(pr.left), g.path_map(pr.right)});
    if (!j) throw Error("induced pair has no counterpart after gluing: " + format_pair(g.a().quiver(), pr));
    m.set_column(i, SparseVector::unit(*j));
  }
  return m;
}

}  // namespace

GluingAnalysis::GluingAnalysis(GluedAlgebra g)
    : g_(std::move(g)),
      ca_(g_.a()),
      cb_(g_.b()),
      kind_(gluing_kind(g_)),
      psi0_(pair_map(g_, ca_.q0(), cb_.q0())),
      psi1_(pair_map(g_, ca_.q1(), cb_.q1())),
      psi2_(pair_map(g_, ca_.z(), cb_.z())) {}

bool GluingAnalysis::near_glued(VertexId v) const {
  return v == g_.e1() || v == g_.e2() || v == g_.en1() || v == g_.en();
}

SparseVector GluingAnalysis::gamma_pair() const {
  Path gp = Path::of_arrow(g_.b().quiver(), g_.glued_arrow());
  return SparseVector::unit(cb_.q1().require({gp, gp}));
}

SparseVector GluingAnalysis::alpha_minus_beta() const {
  const Quiver& q = g_.a().quiver();
  Path pa = Path::of_arrow(q, g_.alpha());
  Path pb = Path::of_arrow(q, g_.beta());
  const Field& f = g_.a().field();
  return SparseVector(f, {{ca_.q1().require({pa, pa}), f.from_int(1)}, {ca_.q1().require({pb, pb}), f.from_int(-1)}});
}

SpecialPaths GluingAnalysis::special_paths() const {
  std::vector<Path> first, second;
  std::vector<SparseVector> gens;
  auto scan = [&](VertexId x, VertexId y, std::vector<Path>& into) {
    for (const auto& p : g_.a().basis()) {
      if (p.is_trivial()) continue;
      bool between = (p.source() == x && p.target() == y) || (p.source() == y && p.target() == x);
      if (!between) continue;
      Path ps = g_.path_map(p);
      SparseVector v = cb_.delta0().apply(SparseVector::unit(cb_.q0().require({Path::trivial(ps.source()), ps})));
      if (v.is_zero()) continue;
      into.push_back(p);
      gens.push_back(std::move(v));
    }
  };
  scan(g_.e1(), g_.en1(), first);
  scan(g_.e2(), g_.en(), second);
  auto z = Subspace::span(cb_.field(), cb_.q1().size(), gens);
  const std::size_t d = z.dim();
  return SpecialPaths{std::move(first), std::move(second), std::move(z), d};
}

CrucialPaths GluingAnalysis::crucial_paths() const {
  CrucialPaths out;
  if (!kind_.source_sink) return out;
  out.applicable = true;
  const Quiver& q = g_.a().quiver();
  Path pa = Path::of_arrow(q, g_.alpha());
  Path pb = Path::of_arrow(q, g_.beta());
  for (const auto& p : g_.a().basis()) {
    if (p.is_trivial() || p.source() != g_.e2() || p.target() != g_.en1()) continue;
    if (g_.a().basis_index(compose(pb, compose(p, pa)))) out.paths.push_back(p);
  }
  out.cp = out.paths.size();
  return out;
}

SpecialPairs GluingAnalysis::special_pairs() const {
  std::vector<SpecialPair> pairs;
  const Quiver& qa = g_.a().quiver();
  const Quiver& qb = g_.b().quiver();
  Path pa = Path::of_arrow(qa, g_.alpha());
  Path pb = Path::of_arrow(qa, g_.beta());
  Path gp = Path::of_arrow(qb, g_.glued_arrow());
  std::vector<SparseVector> gens;
  for (auto a : qa.arrows()) {
    if (!near_glued(qa.source(a)) && !near_glued(qa.target(a))) continue;
    Path ap = Path::of_arrow(qa, a);
    Path as = Path::of_arrow(qb, g_.arrow_map(a));
    for (const auto& p : g_.a().basis()) {
      if (parallel(ap, p)) continue;
      Path ps = g_.path_map(p);
      if (!parallel(as, ps) || (as == gp && ps == gp)) continue;
      if (a == g_.alpha() && parallel(p, pb)) continue;
      if (a == g_.beta() && parallel(p, pa)) continue;
      if (p == pa && parallel(ap, pb)) continue;
      if (p == pb && parallel(ap, pa)) continue;
      pairs.push_back(SpecialPair{a, p});
      gens.push_back(SparseVector::unit(cb_.q1().require({as, ps})));
    }
  }
  auto sp = Subspace::span(cb_.field(), cb_.q1().size(), gens);
  auto z = intersect(sp, cb_.ker_delta1());
  const std::size_t d = z.dim();
  return SpecialPairs{std::move(pairs), std::move(sp), std::move(z), d};
}

NonSpecialPaths GluingAnalysis::nsp_data() const {
  std::vector<Path> paths;
  std::vector<SparseVector> gens;
  for (const auto& p : g_.a().basis()) {
    if (p.is_trivial()) continue;
    auto s = p.source(), t = p.target();
    bool first = (s == g_.e1() && t == g_.en1()) || (s == g_.en1() && t == g_.e1());
    bool second = (s == g_.e2() && t == g_.en()) || (s == g_.en() && t == g_.e2());
    if (!first && !second) continue;
    paths.push_back(p);
    Path ps = g_.path_map(p);
    gens.push_back(SparseVector::unit(cb_.q0().require({Path::trivial(ps.source()), ps})));
  }
  auto sp = Subspace::span(cb_.field(), cb_.q0().size(), gens);
  auto z = intersect(sp, cb_.hh0());
  const std::size_t d = z.dim();
  return NonSpecialPaths{std::move(paths), std::move(sp), std::move(z), d};
}

AssumptionCheck GluingAnalysis::assumption() const {
  AssumptionCheck out;
  const Quiver& q = g_.a().quiver();
  const std::uint32_t p = g_.a().field().characteristic();
  if (p == 0) return out;
  for (const auto& r : g_.a().relations()) {
    ArrowId a = r.arrows().front();
    if (!q.is_loop(a) || !near_glued(q.source(a))) continue;
    if (!std::all_of(r.arrows().begin(), r.arrows().end(), [&](ArrowId x) { return x == a; })) continue;
    if (r.length() % p == 0) {
      out.holds = false;
      out.witness = std::make_pair(a, r.length());
      return out;
    }
  }
  return out;
}

}  // namespace hochglue
