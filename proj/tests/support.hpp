#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hochglue/algebra_file.hpp"
#include "hochglue/errors.hpp"
#include "hochglue/examples.hpp"
#include "hochglue/strametz.hpp"

namespace testing {

using namespace hochglue;

inline MonomialAlgebra example(const std::string& name) { return parse_algebra(builtin_example(name).text); }

//! Path from a vertex name or a traversal-order list of arrow names.
inline Path path_of(const Quiver& q, const std::string& words) {
  std::istringstream in(words);
  std::vector<ArrowId> arrows;
  std::string w;
  while (in >> w) {
    if (auto a = q.find_arrow(w)) {
      arrows.push_back(*a);
    } else if (auto v = q.find_vertex(w); v && arrows.empty()) {
      return Path::trivial(*v);
    } else {
      throw Error("test helper: unknown name " + w);
    }
  }
  return Path::of_arrows(q, arrows);
}

inline ParallelPair pair_of(const Quiver& q, const std::string& left, const std::string& right) {
  return ParallelPair{path_of(q, left), path_of(q, right)};
}

struct Term {
  long coeff;
  std::string left;
  std::string right;
};

inline SparseVector vec(const Quiver& q, const PairSpace& space, const Field& f, const std::vector<Term>& terms) {
  std::vector<std::pair<Index, Scalar>> e;
  for (const auto& t : terms) e.emplace_back(space.require(pair_of(q, t.left, t.right)), f.from_int(t.coeff));
  return SparseVector(f, std::move(e));
}

inline Subspace span(const Quiver& q, const PairSpace& space, const Field& f,
                     const std::vector<std::vector<Term>>& gens) {
  Subspace s(f, space.size());
  for (const auto& g : gens) s.insert(vec(q, space, f, g));
  return s;
}

}  // namespace testing
