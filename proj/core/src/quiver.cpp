#include "hochglue/quiver.hpp"

#include <algorithm>
#include <deque>

#include "hochglue/errors.hpp"

namespace hochglue {

VertexId Quiver::add_vertex(std::string name) {
  vertex_names_.push_back(std::move(name));
  return VertexId{static_cast<std::uint32_t>(vertex_names_.size() - 1)};
}

ArrowId Quiver::add_arrow(std::string name, VertexId source, VertexId target) {
  if (source.value >= vertex_count() || target.value >= vertex_count()) {
    throw Error("arrow '" + name + "' has an endpoint outside the vertex set");
  }
  arrows_.push_back(Arrow{std::move(name), source, target});
  return ArrowId{static_cast<std::uint32_t>(arrows_.size() - 1)};
}

std::optional<VertexId> Quiver::find_vertex(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - vertex_names_.begin())};
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(),
                         [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return ArrowId{static_cast<std::uint32_t>(it - arrows_.begin())};
}

std::vector<VertexId> Quiver::vertices() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < vertex_count(); ++i) out.push_back(VertexId{i});
  return out;
}

std::vector<ArrowId> Quiver::arrows() const {
  std::vector<ArrowId> out;
  for (std::uint32_t i = 0; i < arrow_count(); ++i) out.push_back(ArrowId{i});
  return out;
}

std::vector<ArrowId> Quiver::out_arrows(VertexId v) const {
  std::vector<ArrowId> out;
  for (auto a : arrows()) {
    if (source(a) == v) out.push_back(a);
  }
  return out;
}

std::vector<ArrowId> Quiver::in_arrows(VertexId v) const {
  std::vector<ArrowId> out;
  for (auto a : arrows()) {
    if (target(a) == v) out.push_back(a);
  }
  return out;
}

Path Path::trivial(VertexId v) { return Path(v, v, {}); }

Path Path::of_arrow(const Quiver& q, ArrowId a) { return Path(q.source(a), q.target(a), {a}); }

Path Path::of_arrows(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw CompositionError("empty arrow sequence has no base vertex");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.target(arrows[i]) != q.source(arrows[i + 1])) {
      throw CompositionError("'" + q.arrow(arrows[i + 1]).name + "' does not start where '" +
                             q.arrow(arrows[i]).name + "' ends");
    }
  }
  VertexId s = q.source(arrows.front());
  VertexId t = q.target(arrows.back());
  return Path(s, t, std::move(arrows));
}

Path Path::subpath(const Quiver& q, std::size_t pos, std::size_t len) const {
  if (pos + len > length()) throw Error("subpath out of range");
  if (len == 0) {
    VertexId v = pos == 0 ? source_ : q.target(arrows_[pos - 1]);
    return trivial(v);
  }
  std::vector<ArrowId> part(arrows_.begin() + static_cast<std::ptrdiff_t>(pos),
                            arrows_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  VertexId s = q.source(part.front());
  VertexId t = q.target(part.back());
  return Path(s, t, std::move(part));
}

bool Path::contains(const Path& other) const {
  if (other.is_trivial() || other.length() > length()) return false;
  return std::search(arrows_.begin(), arrows_.end(), other.arrows_.begin(), other.arrows_.end()) !=
         arrows_.end();
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = length() <=> other.length(); c != 0) return c;
  if (auto c = arrows_ <=> other.arrows_; c != 0) return c;
  return source_ <=> other.source_;
}

Path compose(const Path& later, const Path& earlier) {
  if (later.source() != earlier.target()) {
    throw CompositionError("composition undefined: endpoints do not match");
  }
  std::vector<ArrowId> arrows = earlier.arrows_;
  arrows.insert(arrows.end(), later.arrows_.begin(), later.arrows_.end());
  return Path(earlier.source(), later.target(), std::move(arrows));
}

bool parallel(const Path& p, const Path& q) {
  return p.source() == q.source() && p.target() == q.target();
}

std::string display(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return q.vertex_name(p.source());
  std::string out;
  for (auto it = p.arrows().rbegin(); it != p.arrows().rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += q.arrow(*it).name;
  }
  return out;
}

std::string traversal(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return q.vertex_name(p.source());
  std::string out;
  for (auto a : p.arrows()) {
    if (!out.empty()) out += ' ';
    out += q.arrow(a).name;
  }
  return out;
}

Walk Walk::trivial(VertexId v) {
  Walk w;
  w.start_ = v;
  w.end_ = v;
  return w;
}

Walk& Walk::then(const Quiver& q, WalkStep step) {
  const Arrow& a = q.arrow(step.arrow);
  VertexId from = step.forward ? a.source : a.target;
  if (from != end_) throw CompositionError("walk step '" + a.name + "' is not incident to the walk end");
  end_ = step.forward ? a.target : a.source;
  steps_.push_back(step);
  return *this;
}

Walk Walk::followed_by(const Quiver& q, const Walk& next) const {
  if (next.start_ != end_) throw CompositionError("walks do not meet");
  Walk w = *this;
  for (const auto& s : next.steps_) w.then(q, s);
  return w;
}

Walk Walk::inverse() const {
  Walk w;
  w.start_ = end_;
  w.end_ = start_;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    w.steps_.push_back(WalkStep{it->arrow, !it->forward});
  }
  return w;
}

Walk Walk::reduced() const {
  Walk w;
  w.start_ = start_;
  w.end_ = end_;
  for (const auto& s : steps_) {
    if (!w.steps_.empty() && w.steps_.back().arrow == s.arrow && w.steps_.back().forward != s.forward) {
      w.steps_.pop_back();
    } else {
      w.steps_.push_back(s);
    }
  }
  return w;
}

long Walk::signed_count(ArrowId a) const {
  long n = 0;
  for (const auto& s : steps_) {
    if (s.arrow == a) n += s.forward ? 1 : -1;
  }
  return n;
}

Components connected_components(const Quiver& q) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  Components c;
  c.component_of.assign(q.vertex_count(), unset);
  std::vector<std::vector<VertexId>> adj(q.vertex_count());
  for (auto a : q.arrows()) {
    adj[q.source(a).value].push_back(q.target(a));
    adj[q.target(a).value].push_back(q.source(a));
  }
  for (auto v : q.vertices()) {
    if (c.component_of[v.value] != unset) continue;
    std::deque<VertexId> todo{v};
    c.component_of[v.value] = c.count;
    while (!todo.empty()) {
      VertexId u = todo.front();
      todo.pop_front();
      for (auto w : adj[u.value]) {
        if (c.component_of[w.value] == unset) {
          c.component_of[w.value] = c.count;
          todo.push_back(w);
        }
      }
    }
    ++c.count;
  }
  return c;
}

std::size_t betti(const Quiver& q) {
  return q.arrow_count() + connected_components(q).count - q.vertex_count();
}

bool is_source_arrow(const Quiver& q, ArrowId a) {
  VertexId s = q.source(a);
  VertexId t = q.target(a);
  if (s == t || !q.in_arrows(s).empty()) return false;
  for (auto b : q.arrows()) {
    if (b == a) continue;
    if (q.source(b) == s || q.target(b) == t) return false;
  }
  return true;
}

bool is_sink_arrow(const Quiver& q, ArrowId a) {
  VertexId s = q.source(a);
  VertexId t = q.target(a);
  if (s == t || !q.out_arrows(t).empty()) return false;
  for (auto b : q.arrows()) {
    if (b == a) continue;
    if (q.source(b) == s || q.target(b) == t) return false;
  }
  return true;
}

std::optional<std::size_t> crown_order(const Quiver& q) {
  std::size_t n = q.vertex_count();
  if (n == 0 || q.arrow_count() != n || connected_components(q).count != 1) return std::nullopt;
  for (auto v : q.vertices()) {
    if (q.out_arrows(v).size() != 1 || q.in_arrows(v).size() != 1) return std::nullopt;
  }
  return n;
}

}  // namespace hochglue
