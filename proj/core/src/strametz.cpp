#include "hochglue/strametz.hpp"

#include <algorithm>

#include "hochglue/errors.hpp"

namespace hochglue {

PairSpace::PairSpace(PairKind kind, std::vector<ParallelPair> pairs) : kind_(kind), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (Index i = 0; i < pairs_.size(); ++i) index_.emplace(pairs_[i], i);
}

namespace {
std::vector<ParallelPair> pairs_with(const MonomialAlgebra& a, const std::vector<Path>& lefts) {
  std::vector<ParallelPair> out;
  for (const auto& l : lefts) {
    for (const auto& p : a.basis()) {
      if (parallel(l, p)) out.push_back(ParallelPair{l, p});
    }
  }
  return out;
}
}  // namespace

PairSpace PairSpace::vertices(const MonomialAlgebra& a) {
  std::vector<Path> lefts;
  for (auto v : a.quiver().vertices()) lefts.push_back(Path::trivial(v));
  return PairSpace(PairKind::vertex, pairs_with(a, lefts));
}

PairSpace PairSpace::arrows(const MonomialAlgebra& a) {
  std::vector<Path> lefts;
  for (auto x : a.quiver().arrows()) lefts.push_back(Path::of_arrow(a.quiver(), x));
  return PairSpace(PairKind::arrow, pairs_with(a, lefts));
}

PairSpace PairSpace::relations(const MonomialAlgebra& a) {
  return PairSpace(PairKind::relation, pairs_with(a, a.relations()));
}

std::optional<Index> PairSpace::index(const ParallelPair& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index PairSpace::require(const ParallelPair& p) const {
  auto i = index(p);
  if (!i) throw Error("pair is not a basis element of the pair space");
  return *i;
}

long PairSpace::grade(Index i) const {
  return static_cast<long>(at(i).right.length()) - static_cast<long>(at(i).left.length());
}

std::string format_pair(const Quiver& q, const ParallelPair& p) {
  return display(q, p.left) + "||" + display(q, p.right);
}

std::string format_vector(const Quiver& q, const PairSpace& space, const SparseVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : v.entries()) {
    std::string coeff = Field::format(c);
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + " ";
    out += "(" + format_pair(q, space.at(i)) + ")";
  }
  return out;
}

std::string format_subspace(const Quiver& q, const PairSpace& space, const Subspace& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.rows().size(); ++i) {
    if (i != 0) out += ", ";
    out += format_vector(q, space, s.rows()[i]);
  }
  return out + ">";
}

std::map<Path, long> substitute(const MonomialAlgebra& a, const Path& p, ArrowId arrow, const Path& gamma) {
  std::map<Path, long> out;
  const auto& seq = p.arrows();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != arrow) continue;
    std::vector<ArrowId> replaced(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
    replaced.insert(replaced.end(), gamma.arrows().begin(), gamma.arrows().end());
    replaced.insert(replaced.end(), seq.begin() + static_cast<std::ptrdiff_t>(i + 1), seq.end());
    Path r = replaced.empty() ? Path::trivial(gamma.source()) : Path::of_arrows(a.quiver(), std::move(replaced));
    if (a.basis_index(r)) ++out[r];
  }
  return out;
}

LieAlgebraPresentation quotient_lie(
    const Subspace& kernel, const Subspace& ideal,
    const std::function<SparseVector(const SparseVector&, const SparseVector&)>& bracket) {
  Subspace reps = complement(kernel, ideal);
  LieAlgebraPresentation lie;
  lie.basis = reps.rows();
  const std::size_t d = reps.dim();
  lie.constants.assign(d, std::vector<std::vector<Scalar>>(d));
  const Field& f = kernel.field();
  // The bracket is alternating, so only i < j is evaluated.
  for (std::size_t i = 0; i < d; ++i) {
    lie.constants[i][i].assign(d, Scalar(0));
    for (std::size_t j = i + 1; j < d; ++j) {
      SparseVector b = bracket(lie.basis[i], lie.basis[j]);
      if (!kernel.contains(b)) throw ContainmentError("bracket leaves the kernel");
      lie.constants[i][j] = quotient_coordinates(ideal, reps, b);
      lie.constants[j][i] = lie.constants[i][j];
      for (auto& c : lie.constants[j][i]) c = f.neg(c);
    }
  }
  return lie;
}

std::vector<Scalar> quotient_coordinates(const Subspace& ideal, const Subspace& representatives,
                                         const SparseVector& x) {
  return representatives.coordinates(ideal.reduce(x));
}

bool is_alternating(const LieAlgebraPresentation& lie) {
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    for (const auto& c : lie.constants[i][i]) {
      if (!Field::is_zero(c)) return false;
    }
  }
  return true;
}

bool satisfies_jacobi(const Field& f, const LieAlgebraPresentation& lie) {
  const std::size_t d = lie.dim();
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
  std::vector<std::vector<Sparse>> c(d, std::vector<Sparse>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        if (!Field::is_zero(lie.constants[i][j][l])) c[i][j].emplace_back(l, lie.constants[i][j][l]);
      }
    }
  }
  std::vector<Scalar> acc(d);
  // adds [[x_i, x_j], x_k] into acc
  auto nested = [&](std::size_t i, std::size_t j, std::size_t k) {
    for (const auto& [l, a] : c[i][j]) {
      for (const auto& [m, b] : c[l][k]) acc[m] = f.add(acc[m], f.mul(a, b));
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        std::fill(acc.begin(), acc.end(), Scalar(0));
        nested(i, j, k);
        nested(j, k, i);
        nested(k, i, j);
        for (const auto& s : acc) {
          if (!Field::is_zero(s)) return false;
        }
      }
    }
  }
  return true;
}

std::size_t lie_center_dim(const Field& f, const LieAlgebraPresentation& lie) {
  const std::size_t d = lie.dim();
  std::vector<SparseVector> cols;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::pair<Index, Scalar>> e;
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) e.emplace_back(j * d + k, lie.constants[i][j][k]);
    }
    cols.emplace_back(f, std::move(e));
  }
  return LinearMap(f, d, d * d, std::move(cols)).kernel().dim();
}

StrametzComplex::StrametzComplex(MonomialAlgebra a)
    : algebra_(std::move(a)),
      q0_(PairSpace::vertices(algebra_)),
      q1_(PairSpace::arrows(algebra_)),
      z_(PairSpace::relations(algebra_)),
      delta0_(algebra_.field(), q0_.size(), q1_.size()),
      delta1_(algebra_.field(), q1_.size(), z_.size()),
      ker_delta0_(algebra_.field(), q0_.size()),
      im_delta0_(algebra_.field(), q1_.size()),
      ker_delta1_(algebra_.field(), q1_.size()),
      hh1_reps_(algebra_.field(), q1_.size()) {
  const Quiver& q = algebra_.quiver();
  const Field& f = algebra_.field();
  for (Index i = 0; i < q0_.size(); ++i) {
    const Path& e = q0_.at(i).left;
    const Path& g = q0_.at(i).right;
    std::vector<std::pair<Index, Scalar>> col;
    for (auto x : q.out_arrows(e.source())) {
      Path ax = Path::of_arrow(q, x);
      Path p = compose(ax, g);
      if (algebra_.basis_index(p)) col.emplace_back(q1_.require({ax, p}), f.from_int(1));
    }
    for (auto x : q.in_arrows(e.source())) {
      Path ax = Path::of_arrow(q, x);
      Path p = compose(g, ax);
      if (algebra_.basis_index(p)) col.emplace_back(q1_.require({ax, p}), f.from_int(-1));
    }
    delta0_.set_column(i, SparseVector(f, std::move(col)));
  }
  for (Index i = 0; i < q1_.size(); ++i) {
    const Path& arrow = q1_.at(i).left;
    const Path& g = q1_.at(i).right;
    std::vector<std::pair<Index, Scalar>> col;
    for (const auto& r : algebra_.relations()) {
      for (const auto& [p, mult] : substitute(algebra_, r, arrow.arrows().front(), g)) {
        col.emplace_back(z_.require({r, p}), f.from_int(mult));
      }
    }
    delta1_.set_column(i, SparseVector(f, std::move(col)));
  }
  ker_delta0_ = delta0_.kernel();
  im_delta0_ = delta0_.image();
  ker_delta1_ = delta1_.kernel();
  hh1_reps_ = complement(ker_delta1_, im_delta0_);
}

Subspace StrametzComplex::q0_trivial_part() const {
  Subspace s(field(), q0_.size());
  for (Index i = 0; i < q0_.size(); ++i) {
    if (q0_.at(i).right.is_trivial()) s.insert(SparseVector::unit(i));
  }
  return s;
}

Subspace StrametzComplex::q0_positive_part() const {
  Subspace s(field(), q0_.size());
  for (Index i = 0; i < q0_.size(); ++i) {
    if (!q0_.at(i).right.is_trivial()) s.insert(SparseVector::unit(i));
  }
  return s;
}

SparseVector StrametzComplex::bracket_pairs(Index i, Index j) const {
  const Field& f = field();
  const ParallelPair& x = q1_.at(i);
  const ParallelPair& y = q1_.at(j);
  std::vector<std::pair<Index, Scalar>> e;
  for (const auto& [p, mult] : substitute(algebra_, y.right, x.left.arrows().front(), x.right)) {
    e.emplace_back(q1_.require({y.left, p}), f.from_int(mult));
  }
  for (const auto& [p, mult] : substitute(algebra_, x.right, y.left.arrows().front(), y.right)) {
    e.emplace_back(q1_.require({x.left, p}), f.from_int(-mult));
  }
  return SparseVector(f, std::move(e));
}

SparseVector StrametzComplex::bracket(const SparseVector& x, const SparseVector& y) const {
  const Field& f = field();
  std::vector<std::pair<Index, Scalar>> e;
  for (const auto& [i, c] : x.entries()) {
    for (const auto& [j, d] : y.entries()) {
      const Scalar cd = f.mul(c, d);
      const SparseVector b = bracket_pairs(i, j);
      for (const auto& [k, v] : b.entries()) e.emplace_back(k, f.mul(cd, v));
    }
  }
  return SparseVector(f, std::move(e));
}

LieAlgebraPresentation StrametzComplex::hh1_lie() const {
  return quotient_lie(ker_delta1_, im_delta0_,
                      [this](const SparseVector& x, const SparseVector& y) { return bracket(x, y); });
}

SparseVector StrametzComplex::center_to_algebra(const SparseVector& z) const {
  std::vector<std::pair<Index, Scalar>> e;
  for (const auto& [i, c] : z.entries()) e.emplace_back(*algebra_.basis_index(q0_.at(i).right), c);
  return SparseVector(field(), std::move(e));
}

SparseVector StrametzComplex::algebra_to_center(const SparseVector& x) const {
  std::vector<std::pair<Index, Scalar>> e;
  for (const auto& [i, c] : x.entries()) {
    const Path& p = algebra_.basis()[i];
    if (p.source() != p.target()) throw Error("element is not supported on cycles");
    e.emplace_back(q0_.require({Path::trivial(p.source()), p}), c);
  }
  return SparseVector(field(), std::move(e));
}

SparseVector StrametzComplex::multiply(const SparseVector& x, const SparseVector& y) const {
  const Field& f = field();
  std::vector<std::pair<Index, Scalar>> e;
  for (const auto& [i, c] : x.entries()) {
    for (const auto& [j, d] : y.entries()) {
      if (auto p = algebra_.multiply(algebra_.basis()[i], algebra_.basis()[j])) {
        e.emplace_back(*algebra_.basis_index(*p), f.mul(c, d));
      }
    }
  }
  return SparseVector(f, std::move(e));
}

CenterTable StrametzComplex::center_product() const {
  CenterTable t;
  t.basis = ker_delta0_.rows();
  const std::size_t d = t.basis.size();
  t.product.assign(d, std::vector<std::vector<Scalar>>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SparseVector p = multiply(center_to_algebra(t.basis[i]), center_to_algebra(t.basis[j]));
      t.product[i][j] = ker_delta0_.coordinates(algebra_to_center(p));
    }
  }
  std::vector<std::pair<Index, Scalar>> unit;
  for (auto v : algebra_.quiver().vertices()) {
    unit.emplace_back(q0_.require({Path::trivial(v), Path::trivial(v)}), Scalar(1));
  }
  t.unit = ker_delta0_.coordinates(SparseVector(field(), std::move(unit)));
  return t;
}

}  // namespace hochglue
