#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochglue/algebra.hpp"
#include "hochglue/gluing.hpp"
#include "hochglue/linalg.hpp"

namespace hochglue {

// ---- oracles -------------------------------------------------------------

//! Solutions of z*b = b*z for every basis path b, as a subspace of A on its path basis.
Subspace oracle_center(const MonomialAlgebra& a);

//! dim Der(A) - dim InnDer(A), derivations solved from the presentation of A.
std::size_t oracle_hh1_dim(const MonomialAlgebra& a);

struct DerivationSpaces {
  std::size_t der = 0;
  std::size_t inner = 0;
};
DerivationSpaces oracle_derivations(const MonomialAlgebra& a);

// ---- checks --------------------------------------------------------------

enum class CheckStatus { pass, fail, not_applicable, assumption_violated };

std::string to_string(CheckStatus s);

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::not_applicable;
  std::string lhs;
  std::string rhs;
  std::string witness;
  std::string reason;
  //! Intermediate values in a fixed order per check.
  std::vector<std::pair<std::string, std::string>> details;
  double elapsed_seconds = 0.0;
  //! Algebra file plus the glued arrows; only set on failure.
  std::string reproduction;
};

//! All check ids in their canonical order.
const std::vector<std::string>& check_ids();

//! Throws Error for an unknown id.
CheckReport run_check(const std::string& id, const GluingAnalysis& an);
std::vector<CheckReport> run_checks(const GluingAnalysis& an, const std::vector<std::string>& ids);

// ---- random instances ----------------------------------------------------

struct RandomSpec {
  std::uint64_t seed = 0;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::size_t max_arrows = 7;
  std::size_t max_relation_length = 3;
  double relation_density = 0.5;
  Field field = Field::rationals();
};

struct GluingSpec {
  ArrowId alpha;
  ArrowId beta;
  bool operator==(const GluingSpec&) const = default;
};

//! Reproducible; relation sets that leave the algebra infinite are resampled, falling back to rad^2 = 0.
MonomialAlgebra random_instance(const RandomSpec& spec);
//! A uniformly drawn ordered arrow pair with four distinct endpoints, if any.
std::optional<GluingSpec> random_gluing(const MonomialAlgebra& a, std::uint64_t seed);

enum class FuzzMode { generic, source_sink, two_block };
std::string to_string(FuzzMode m);

struct FuzzInstance {
  MonomialAlgebra algebra;
  GluingSpec gluing;
  FuzzMode mode;
};

//! Generic: random_instance plus random_gluing. Source-sink: a random core with a fresh
//! source arrow and sink arrow attached. Two-block: two random cores, one arrow from each.
FuzzInstance random_fuzz_instance(std::uint64_t seed, FuzzMode mode, const RandomSpec& shape);

struct FuzzSummary {
  std::size_t instances = 0;
  //! check id -> status -> count
  std::map<std::string, std::map<CheckStatus, std::size_t>> counts;
  std::vector<CheckReport> failures;
  [[nodiscard]] std::size_t count(const std::string& check, CheckStatus s) const;
};

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::vector<std::string> checks;  // empty: all
  std::vector<Field> fields{Field::rationals()};
  RandomSpec shape{};
};

//! Instance i uses seed + i, mode i mod 3 and field i mod |fields|.
FuzzSummary run_fuzz(const FuzzOptions& options);

}  // namespace hochglue
