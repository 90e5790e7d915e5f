#include "hochglue/fundamental_group.hpp"

#include <algorithm>
#include <deque>

#include "hochglue/errors.hpp"

namespace hochglue {

std::size_t pi1_rank(const MonomialAlgebra& a) { return betti(a.quiver()); }

ChordDualBasis chord_duals(const Quiver& q, std::optional<ArrowId> avoid) {
  ChordDualBasis out;
  out.parent.assign(q.vertex_count(), std::nullopt);
  std::vector<bool> seen(q.vertex_count(), false);
  std::vector<bool> in_tree(q.arrow_count(), false);
  for (auto root : q.vertices()) {
    if (seen[root.value]) continue;
    out.roots.push_back(root);
    seen[root.value] = true;
    std::deque<VertexId> todo{root};
    while (!todo.empty()) {
      VertexId u = todo.front();
      todo.pop_front();
      for (auto a : q.arrows()) {
        if (avoid && a == *avoid) continue;
        VertexId w;
        if (q.source(a) == u) {
          w = q.target(a);
        } else if (q.target(a) == u) {
          w = q.source(a);
        } else {
          continue;
        }
        if (seen[w.value]) continue;
        seen[w.value] = true;
        in_tree[a.value] = true;
        out.parent[w.value] = a;
        todo.push_back(w);
      }
    }
  }
  if (avoid && out.roots.size() != connected_components(q).count) {
    throw CannotAvoidError("arrow '" + q.arrow(*avoid).name + "' is a bridge and cannot be kept out of the forest");
  }
  for (auto a : q.arrows()) (in_tree[a.value] ? out.tree : out.chords).push_back(a);
  return out;
}

namespace {

// Walk from the component root down to v.
Walk from_root(const Quiver& q, const ChordDualBasis& forest, VertexId v) {
  std::vector<WalkStep> up;
  VertexId cur = v;
  while (auto a = forest.parent[cur.value]) {
    bool forward = q.target(*a) == cur;
    up.push_back(WalkStep{*a, forward});
    cur = forward ? q.source(*a) : q.target(*a);
  }
  Walk w = Walk::trivial(cur);
  for (auto it = up.rbegin(); it != up.rend(); ++it) w.then(q, *it);
  return w;
}

}  // namespace

Walk tree_walk(const Quiver& q, const ChordDualBasis& forest, VertexId from, VertexId to) {
  Walk a = from_root(q, forest, from);
  Walk b = from_root(q, forest, to);
  if (a.start() != b.start()) throw Error("tree walk between different components");
  return a.inverse().followed_by(q, b).reduced();
}

ParadeData tree_parade(const Quiver& q, const ChordDualBasis& forest) {
  ParadeData p;
  for (auto v : q.vertices()) p.walks.push_back(from_root(q, forest, v));
  return p;
}

SparseVector theta(const StrametzComplex& c, ArrowId chord, const ParadeData& parade) {
  const Quiver& q = c.algebra().quiver();
  const Field& f = c.field();
  if (parade.walks.size() != q.vertex_count()) throw ShapeError("parade data needs one walk per vertex");
  std::vector<std::pair<Index, Scalar>> entries;
  for (auto a : q.arrows()) {
    const Walk& ws = parade.walks[q.source(a).value];
    const Walk& wt = parade.walks[q.target(a).value];
    Walk loop = ws;
    loop.then(q, WalkStep{a, true});
    loop = loop.followed_by(q, wt.inverse()).reduced();
    long n = loop.signed_count(chord);
    if (n == 0) continue;
    Path pa = Path::of_arrow(q, a);
    entries.emplace_back(c.q1().require({pa, pa}), f.from_int(n));
  }
  SparseVector v(f, std::move(entries));
  if (!c.ker_delta1().contains(v)) throw ContainmentError("theta image is not a cocycle");
  return v;
}

bool ThetaDiagramReport::commutes() const {
  return applicable && left_square &&
         std::all_of(generators.begin(), generators.end(), [](const ThetaGenerator& g) { return g.commutes; });
}

std::string format_walk(const Quiver& q, const Walk& w) {
  if (w.steps().empty()) return "trivial";
  std::string out;
  for (const auto& s : w.steps()) {
    if (!out.empty()) out += ' ';
    out += q.arrow(s.arrow).name;
    if (!s.forward) out += "^-1";
  }
  return out;
}

ThetaDiagramReport check_theta_diagram(const GluingAnalysis& an) {
  ThetaDiagramReport r;
  const GluedAlgebra& g = an.gluing();
  if (!an.kind().source_sink) {
    r.reason = "alpha is not a source arrow or beta is not a sink arrow";
    return r;
  }
  if (!an.kind().same_block) {
    r.reason = "the glued arrows lie in different blocks";
    return r;
  }
  const Quiver& qa = g.a().quiver();
  const Quiver& qb = g.b().quiver();
  const ArrowId gamma = g.glued_arrow();
  ChordDualBasis fb;
  try {
    fb = chord_duals(qb, gamma);
  } catch (const CannotAvoidError& e) {
    r.reason = e.what();
    return r;
  }

  // Parade in Q_B: w*_i from f2 inside f2's component, from the root elsewhere.
  const auto comps = connected_components(qb);
  ParadeData pb;
  for (auto v : qb.vertices()) {
    bool main = comps.component_of[v.value] == comps.component_of[g.f2().value];
    pb.walks.push_back(main ? tree_walk(qb, fb, g.f2(), v) : tree_parade(qb, fb).walks[v.value]);
  }

  std::vector<std::optional<ArrowId>> lift_arrow(qb.arrow_count());
  for (auto a : qa.arrows()) {
    if (a != g.alpha() && a != g.beta()) lift_arrow[g.arrow_map(a).value] = a;
  }
  auto lift_vertex = [&](VertexId vb) {
    if (vb == g.f2()) return g.e2();
    if (vb == g.f1()) return g.en1();
    for (auto x : qa.vertices()) {
      if (g.vertex_map(x) == vb) return x;
    }
    throw Error("vertex without preimage");
  };
  auto lift = [&](const Walk& wb) {
    Walk w = Walk::trivial(lift_vertex(wb.start()));
    for (const auto& s : wb.steps()) w.then(qa, WalkStep{*lift_arrow[s.arrow.value], s.forward});
    return w;
  };

  const Walk v = lift(pb.walks[g.f1().value]);
  r.walk_v = format_walk(qa, v);
  ParadeData pa;
  for (auto x : qa.vertices()) {
    if (x == g.e1()) {
      pa.walks.push_back(Walk::trivial(g.e2()).then(qa, WalkStep{g.alpha(), false}));
    } else if (x == g.en()) {
      Walk w = v;
      pa.walks.push_back(w.then(qa, WalkStep{g.beta(), true}));
    } else {
      pa.walks.push_back(lift(pb.walks[g.vertex_map(x).value]));
    }
    if (pa.walks.back().end() != x) throw Error("lifted parade walk ends at the wrong vertex");
  }

  r.applicable = true;
  const Field& f = an.complex_b().field();
  r.left_square = theta(an.complex_b(), gamma, pb) == an.gamma_pair();
  Subspace y = an.complex_b().im_delta0();
  y.insert(an.gamma_pair());
  for (auto c : fb.chords) {
    if (c == gamma) continue;
    ThetaGenerator gen;
    gen.chord = qb.arrow(c).name;
    gen.rhs = theta(an.complex_b(), c, pb);
    gen.lhs = an.psi1().apply(theta(an.complex_a(), *lift_arrow[c.value], pa));
    gen.commutes = y.contains(gen.lhs.minus(f, gen.rhs));
    r.generators.push_back(std::move(gen));
  }
  return r;
}

}  // namespace hochglue
