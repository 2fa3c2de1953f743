#pragma once

// Lens space surgery obstruction.
//
// If -p surgery on a knot K of genus g yields Y, then for every slot k in
// (-p/2, p/2] there is a Spin^c structure t_k on Y with
//
//   d(Y, t_k) = E(p, k) + 2 h_{|k|},
//
// where the torsion coefficients h satisfy
//   h_j >= 1 for j < g,  h_j = 0 for j >= g,  h nonincreasing in j,
//   h_j <= ceil((g - j) / 2),  and p >= 2g - 1.
//
// The correspondence k -> t_k is not pinned down, so the test here is
// equality of multisets, which never excludes a genuine surgery.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lenslab/d_invariant.hpp"
#include "lenslab/lens_space.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

/// Upper bound on h_i for a knot of (slice) genus g: 0 for |i| >= g,
/// otherwise ceil((g - |i|) / 2).
std::int64_t froyshov_cap(std::int64_t g, std::int64_t i);

/// Candidate torsion coefficients. h[j] is h_{|k|} for |k| = j, with
/// floor(p/2) + 1 entries.
struct HVector {
  std::int64_t g = 0;
  std::vector<std::int64_t> h;

  friend bool operator==(const HVector&, const HVector&) = default;
};

struct FeasibilityReport {
  LensSpace candidate = LensSpace::canonical(1, 0);
  std::int64_t p = 1;
  /// Every (g, h) that passes, ordered by g and then h.
  std::vector<HVector> feasible;
  std::optional<std::int64_t> minimal_genus;
  std::optional<bool> theorem1_ok;
  /// p (lambda(Y) - lambda(L(p,1))), which must equal 2 * sum over slots of h.
  Rational weighted_lambda_gap;
  /// d-invariants of Y coincide with those of L(p, 1) (the g = 0 case).
  bool matches_unknot = false;
  bool truncated = false;
  std::string notes;
};

struct ObstructionOptions {
  /// Defaults to floor((p + 1) / 2), the largest g with p >= 2g - 1.
  std::optional<std::int64_t> g_max;
  DMemo* memo = nullptr;
  /// Witnesses recorded per genus before the search for that genus stops.
  std::size_t max_witnesses_per_genus = 64;
};

FeasibilityReport feasible_genera(const LensSpace& y, const ObstructionOptions& options = {});
FeasibilityReport feasible_genera(const LensSpace& y, std::optional<std::int64_t> g_max);

/// Re-checks a witness from scratch: support, monotonicity, caps, the genus
/// bound, and the multiset equation. Returns a description of the first
/// failed condition, or nullopt if the witness is valid.
std::optional<std::string> validate_witness(const LensSpace& y, const HVector& witness,
                                            DMemo* memo = nullptr);

enum class Theorem1Status { NotRealizable, BoundHolds, BoundViolated };

struct Theorem1Verdict {
  Theorem1Status status = Theorem1Status::NotRealizable;
  std::int64_t p = 0;
  std::optional<std::int64_t> genus;
  bool equality = false;

  std::string describe() const;
};

/// Checks p <= 4g + 3 against the minimal feasible genus.
Theorem1Verdict theorem1_check(const LensSpace& y, DMemo* memo = nullptr);
Theorem1Verdict theorem1_verdict(const FeasibilityReport& report);

enum class SquareStatus {
  Excluded,     ///< a required value is not a perfect square
  SmallCase,    ///< below the range where the square argument applies
  SquaresPass,  ///< both values are squares; the full test decides
  Unprinted,    ///< no square condition is available; the full test decides
};

struct SquareVerdict {
  SquareStatus status = SquareStatus::Excluded;
  std::int64_t p = 0;
  Integer first;
  Integer second;
  bool first_square = false;
  bool second_square = false;
  std::string reason;

  bool defers_to_full_test() const { return status != SquareStatus::Excluded; }
};

/// L(p, 2) as -p surgery forces 2p + 2 and 2p + 18 to be squares when p > 9.
SquareVerdict square_obstruction_q2(std::int64_t p);

/// L(p, 3): for p = 1 (mod 6), p > 14, 6p + 3 and 6p + 27 must be squares;
/// for p = 5 (mod 6), p >= 11, 2p + 3 and 2p + 27 must be squares.
SquareVerdict square_obstruction_q3(std::int64_t p);

/// d(B_{-n}, t_k) = E(n, k) - g + 2 ceil((g - |k|) / 2), the ceiling term
/// taken as 0 once |k| >= g.
Rational d_borromean(std::int64_t n, std::int64_t k, std::int64_t g);

std::string to_string(SquareStatus s);
std::string to_string(Theorem1Status s);

}  // namespace lenslab
