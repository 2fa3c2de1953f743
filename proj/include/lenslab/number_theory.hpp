#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/rational.hpp"

namespace lenslab {

/// Nonnegative gcd; throws std::invalid_argument when both inputs are zero.
std::int64_t gcd(std::int64_t a, std::int64_t b);
Integer gcd(const Integer& a, const Integer& b);

/// Returns q' in [1, p] with q * q' = 1 (mod p). mod_inverse(q, 1) == 1.
/// Throws std::invalid_argument unless p >= 1 and gcd(q, p) == 1.
std::int64_t mod_inverse(std::int64_t q, std::int64_t p);

/// A maximal block of equal Hirzebruch-Jung terms.
struct CFRun {
  std::int64_t value;
  std::int64_t count;

  friend bool operator==(const CFRun&, const CFRun&) = default;
};

/// Hirzebruch-Jung continued fraction [a_1, ..., a_n] = a_1 - 1/(a_2 - ...),
/// every a_i >= 2.
class CFExpansion {
 public:
  explicit CFExpansion(std::vector<std::int64_t> terms);

  const std::vector<std::int64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  CFExpansion reversed() const;

  /// "[4, 2]"
  std::string to_string() const;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;

 private:
  std::vector<std::int64_t> terms_;
};

/// Run-length form of hj_expand. Work is proportional to the Euclidean
/// chain length of (p, q), so long blocks of 2s (e.g. q = p - 1) stay cheap.
std::vector<CFRun> hj_runs(std::int64_t p, std::int64_t q);

/// Expansion of p/q, requires p > q > 0 coprime.
CFExpansion hj_expand(std::int64_t p, std::int64_t q);

/// Evaluates an expansion back to the coprime pair (p, q), p > q > 0.
std::pair<std::int64_t, std::int64_t> hj_eval(const CFExpansion& cf);

/// r with r * r == n, if n is a perfect square. Integer Newton iteration.
std::optional<Integer> exact_sqrt(const Integer& n);

}  // namespace lenslab
