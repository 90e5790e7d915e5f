#include "hochglue/algebra.hpp"

#include <algorithm>

#include "hochglue/errors.hpp"

namespace hochglue {

MonomialAlgebra MonomialAlgebra::build(Quiver quiver, std::vector<Path> relations, Field field,
                                       BuildOptions options) {
  for (const auto& r : relations) {
    if (r.length() < 2) {
      throw AdmissibilityError("relation '" + traversal(quiver, r) + "' has length " +
                               std::to_string(r.length()) + " < 2");
    }
    for (auto a : r.arrows()) {
      if (a.value >= quiver.arrow_count()) throw AdmissibilityError("relation uses an unknown arrow");
    }
  }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());

  std::vector<Path> minimal;
  for (const auto& r : relations) {
    // Relations are sorted by length, so any proper subpath relation precedes r.
    auto sub = std::find_if(minimal.begin(), minimal.end(), [&](const Path& s) { return r.contains(s); });
    if (sub == minimal.end()) {
      minimal.push_back(r);
    } else if (!options.drop_superset_relations) {
      throw MinimalityError("relation '" + traversal(quiver, r) + "' contains relation '" +
                            traversal(quiver, *sub) + "'");
    }
  }

  MonomialAlgebra a(std::move(quiver), std::move(minimal), field);
  a.enumerate_basis(options.max_basis_size);
  return a;
}

std::size_t MonomialAlgebra::max_relation_length() const noexcept {
  std::size_t m = 0;
  for (const auto& r : relations_) m = std::max(m, r.length());
  return m;
}

void MonomialAlgebra::enumerate_basis(std::size_t cap) {
  // A relation-free path is extendable forever iff it revisits a state
  // (end vertex, last w arrows) with w = max relation length - 1.
  const std::size_t w = relations_.empty() ? 0 : max_relation_length() - 1;
  auto same_state = [&](const Path& p, std::size_t i, std::size_t j) {
    VertexId vi = i == 0 ? p.source() : quiver_.target(p.arrows()[i - 1]);
    VertexId vj = j == 0 ? p.source() : quiver_.target(p.arrows()[j - 1]);
    if (vi != vj) return false;
    return std::equal(p.arrows().begin() + static_cast<std::ptrdiff_t>(i - w),
                      p.arrows().begin() + static_cast<std::ptrdiff_t>(i),
                      p.arrows().begin() + static_cast<std::ptrdiff_t>(j - w));
  };
  auto ends_with_relation = [&](const std::vector<ArrowId>& seq) {
    for (const auto& r : relations_) {
      if (r.length() <= seq.size() &&
          std::equal(r.arrows().rbegin(), r.arrows().rend(), seq.rbegin())) {
        return true;
      }
    }
    return false;
  };

  std::vector<Path> layer;
  for (auto v : quiver_.vertices()) layer.push_back(Path::trivial(v));
  basis_ = layer;
  while (!layer.empty()) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (auto a : quiver_.out_arrows(p.target())) {
        std::vector<ArrowId> seq = p.arrows();
        seq.push_back(a);
        if (ends_with_relation(seq)) continue;
        Path q = Path::of_arrows(quiver_, std::move(seq));
        std::size_t len = q.length();
        for (std::size_t i = w; i < len; ++i) {
          if (same_state(q, i, len)) {
            Path cycle = q.subpath(quiver_, i, len - i);
            throw DimensionError("infinite-dimensional: relation-free cycle '" + traversal(quiver_, cycle) +
                                 "' repeats indefinitely");
          }
        }
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end());
    basis_.insert(basis_.end(), next.begin(), next.end());
    if (basis_.size() > cap) {
      throw DimensionError("basis exceeds " + std::to_string(cap) + " paths");
    }
    layer = std::move(next);
  }
  std::sort(basis_.begin(), basis_.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> MonomialAlgebra::basis_index(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool MonomialAlgebra::in_ideal(const Path& p) const {
  // Every relation-free path is a basis path.
  return p.length() >= 2 && !index_.contains(p);
}

std::optional<Path> MonomialAlgebra::multiply(const Path& later, const Path& earlier) const {
  if (later.source() != earlier.target()) return std::nullopt;
  Path p = compose(later, earlier);
  if (in_ideal(p)) return std::nullopt;
  return p;
}

bool MonomialAlgebra::is_radical_square_zero() const {
  return std::none_of(basis_.begin(), basis_.end(), [](const Path& p) { return p.length() >= 2; });
}

std::vector<Path> MonomialAlgebra::path_set(VertexId i, VertexId j) const {
  std::vector<Path> out;
  for (const auto& p : basis_) {
    if (p.length() >= 1 && p.source() == j && p.target() == i) out.push_back(p);
  }
  return out;
}

bool MonomialAlgebra::is_node_arrow(ArrowId gamma) const {
  if (is_source_arrow(quiver_, gamma) || is_sink_arrow(quiver_, gamma)) return false;
  for (auto x : quiver_.in_arrows(quiver_.source(gamma))) {
    for (auto y : quiver_.out_arrows(quiver_.target(gamma))) {
      if (!in_ideal(Path::of_arrows(quiver_, {x, gamma, y}))) return false;
    }
  }
  return true;
}

MonomialAlgebra MonomialAlgebra::with_field(Field f) const {
  MonomialAlgebra a = *this;
  a.field_ = f;
  return a;
}

}  // namespace hochglue
