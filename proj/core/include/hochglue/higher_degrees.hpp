#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hochglue/algebra.hpp"
#include "hochglue/gluing.hpp"
#include "hochglue/quiver.hpp"

namespace hochglue {

using BigMatrix = std::vector<std::vector<mpz_class>>;

//! Powers of the adjacency matrix M, M[i][j] = number of arrows j -> i,
//! so (M^n)[i][j] counts paths of length n from j to i.
class PathCountTable {
 public:
  PathCountTable(const Quiver& q, std::size_t max_power);

  [[nodiscard]] std::size_t max_power() const noexcept { return powers_.size() - 1; }
  //! Throws Error above max_power().
  [[nodiscard]] const BigMatrix& power(std::size_t n) const;

 private:
  std::vector<BigMatrix> powers_;
};

struct ParallelCounts {
  mpz_class paths_arrows;    // |Q_n || Q_1|
  mpz_class cycles_vertices; // |Q_{n-1} || Q_0|
};

ParallelCounts parallel_counts(const Quiver& q, std::size_t n);
ParallelCounts parallel_counts(const Quiver& q, const PathCountTable& table, std::size_t n);

struct HighDegreeDim {
  bool crown = false;   // value is unsupported for crowns
  mpz_class value;
  std::string message;
};

//! dim HH^n for a connected radical square zero algebra and n >= 2.
//! Throws ApplicabilityError otherwise.
HighDegreeDim hh_dim_high(const MonomialAlgebra& a, std::size_t n);

struct HighDegreeEntry {
  std::size_t degree = 0;
  HighDegreeDim dim_a;
  HighDegreeDim dim_b;
  bool inequality = false;
  //! Parallel pairs (p, a) of Q_A in degree n with injective, parallel image; nullopt when skipped.
  std::optional<bool> psi_injective;
  std::size_t pairs_checked = 0;
};

struct HighDegreeReport {
  bool applicable = false;
  std::string reason;
  std::vector<HighDegreeEntry> entries;
  [[nodiscard]] bool holds() const;
};

//! Degrees 2..max_degree for a source-sink gluing of a connected radical square zero algebra.
//! The psi_{n,1} fiber check enumerates pairs only while |Q_n||Q_1| <= enumeration_limit.
HighDegreeReport check_high_degree_gluing(const GluedAlgebra& g, std::size_t max_degree = 12,
                                          std::size_t enumeration_limit = 200000);

}  // namespace hochglue
