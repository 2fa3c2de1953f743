#pragma once

// Batch verifications over ranges of lens spaces and torus knots. Every
// census is deterministic: results come back sorted regardless of `jobs`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lenslab/d_invariant.hpp"
#include "lenslab/lens_space.hpp"
#include "lenslab/number_theory.hpp"
#include "lenslab/obstruction.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

struct CensusOptions {
  unsigned jobs = 1;
  DMemo* memo = nullptr;
};

/// One oriented class L(p, q) tested against the Casson-Walker bound
/// delta(p, q) <= 3(p - 4) / 4.
struct CensusRecord {
  std::int64_t p = 0;
  std::int64_t q = 0;
  Rational delta;
  Rational threshold;
  bool satisfies = false;
  /// Oriented-homeomorphic to L(p,1), L(p,2) or L(p,3).
  bool allowed = false;

  bool violation() const { return satisfies && !allowed; }
};

struct DBoundResult {
  std::vector<CensusRecord> records;
  std::vector<CensusRecord> violations;
};

/// 3(p - 4) / 4, the bound on delta for a -p surgery with p >= 4g + 4.
Rational dbound_threshold(std::int64_t p);

/// Classifies every oriented class with 2 <= p <= p_max. A violation is a
/// class within the bound that is not L(p,1), L(p,2) or L(p,3).
DBoundResult verify_dbound(std::int64_t p_max, const CensusOptions& options = {});

struct DcwViolation {
  std::int64_t p = 0;
  std::int64_t q = 0;
  Rational d_sum;
  Rational p_lambda;
};

struct DcwResult {
  std::size_t pairs_checked = 0;
  std::vector<DcwViolation> violations;
};

/// Checks sum_i d(p, q, i) == p lambda(p, q) for (1, 0) and every coprime
/// 1 <= q < p <= p_max.
DcwResult verify_dcw(std::int64_t p_max, const CensusOptions& options = {});

enum class Table1Family { X, X2, X3, X4, X22, X222, TwoX2 };

const std::vector<Table1Family>& table1_families();
std::string to_string(Table1Family f);

struct Table1Row {
  Table1Family family = Table1Family::X;
  std::int64_t x = 0;
  CFExpansion cf{{2}};
  std::int64_t p = 0;
  std::int64_t q = 0;
  /// (p, q) agrees with the family's tabulated p and q.
  bool pq_match = false;
  /// From lambda_cf; lambda_rec is required to agree.
  Rational delta_oracle;
  bool routes_agree = false;
  Rational delta_printed;
  bool match = false;
  bool within_threshold = false;
};

/// Rows for every family and x_min <= x <= x_max (x_min >= 3).
std::vector<Table1Row> table1(std::int64_t x_min, std::int64_t x_max);

struct TorusSlopeRecord {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::int64_t genus = 0;
  bool bound_ok = false;
  bool equality = false;
};

/// Lens space slopes p/q = (q ab +- 1)/q of the torus knots T(a, b),
/// coprime 2 <= a < b, ab <= ab_max, 1 <= q <= slope_q_max.
std::vector<TorusSlopeRecord> torus_census(std::int64_t ab_max, std::int64_t slope_q_max = 1);

struct SharpnessRecord {
  std::int64_t k = 0;
  std::int64_t p = 0;
  LensSpace candidate = LensSpace::canonical(1, 0);
  LensSpace representative = LensSpace::canonical(1, 0);
  std::optional<std::int64_t> minimal_genus;
  bool equality = false;
  /// minimal genus is k and p = 4k + 3.
  bool ok = false;
};

/// (4k + 3) surgery on T(2, 2k + 1), run through the obstruction as the
/// mirrored candidate L(4k + 3, 4), for k = 1..k_max.
std::vector<SharpnessRecord> sharpness_family(std::int64_t k_max,
                                              const CensusOptions& options = {});

struct SquarePipelineEntry {
  std::int64_t p = 0;
  SquareVerdict verdict;
  /// Set when the verdict defers to the full obstruction.
  std::optional<bool> feasible;

  bool survives() const { return feasible.value_or(false); }
};

/// Square filter followed by feasible_genera on the deferred cases, for
/// L(p, 2) over odd 3 <= p <= p_max and L(p, 3) over 2 <= p <= p_max prime to 3.
std::vector<SquarePipelineEntry> square_pipeline_q2(std::int64_t p_max,
                                                    const CensusOptions& options = {});
std::vector<SquarePipelineEntry> square_pipeline_q3(std::int64_t p_max,
                                                    const CensusOptions& options = {});

std::vector<std::int64_t> survivors(const std::vector<SquarePipelineEntry>& entries);

}  // namespace lenslab
