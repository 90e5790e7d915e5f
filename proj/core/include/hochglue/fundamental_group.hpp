#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hochglue/algebra.hpp"
#include "hochglue/gluing.hpp"
#include "hochglue/linalg.hpp"
#include "hochglue/quiver.hpp"
#include "hochglue/strametz.hpp"

namespace hochglue {

//! Equals the first Betti number of the quiver for monomial ideals.
std::size_t pi1_rank(const MonomialAlgebra& a);

//! BFS spanning forest; every chord c labels the dual that is 1 on the cycle closed by c.
struct ChordDualBasis {
  std::vector<VertexId> roots;       // lowest vertex of each component
  std::vector<ArrowId> tree;         // in id order
  std::vector<ArrowId> chords;       // in id order
  //! Tree arrow through which BFS reached each vertex; nullopt at roots.
  std::vector<std::optional<ArrowId>> parent;
};

//! Throws CannotAvoidError when `avoid` is a bridge.
ChordDualBasis chord_duals(const Quiver& q, std::optional<ArrowId> avoid = std::nullopt);

//! Unique reduced walk inside the forest; throws Error across components.
Walk tree_walk(const Quiver& q, const ChordDualBasis& forest, VertexId from, VertexId to);

//! For every vertex i a walk w_i ending at i; w_i starts at the base of i's component.
struct ParadeData {
  std::vector<Walk> walks;
};

//! w_i = tree walk from the component root to i.
ParadeData tree_parade(const Quiver& q, const ChordDualBasis& forest);

//! sum_a c_a (a||a) with c_a the signed count of `chord` in w_{t(a)}^-1 a w_{s(a)}.
//! Throws ContainmentError if the result is not a cocycle.
SparseVector theta(const StrametzComplex& c, ArrowId chord, const ParadeData& parade);

struct ThetaGenerator {
  std::string chord;   // arrow name in Q_B
  SparseVector lhs;    // psi1(theta_A(sigma(h))) in k((Q_B)_1||B_B)
  SparseVector rhs;    // theta_B(h)
  bool commutes = false;
};

struct ThetaDiagramReport {
  bool applicable = false;
  std::string reason;
  std::string walk_v;  // the walk v in Q_A, steps in traversal order, inverses marked with ^-1
  //! theta_B(g*) == gamma*||gamma*
  bool left_square = false;
  std::vector<ThetaGenerator> generators;
  [[nodiscard]] bool commutes() const;
};

//! Both squares compared modulo Im delta0_B + <gamma*||gamma*>, one entry per chord of Q_B.
ThetaDiagramReport check_theta_diagram(const GluingAnalysis& an);

std::string format_walk(const Quiver& q, const Walk& w);

}  // namespace hochglue
