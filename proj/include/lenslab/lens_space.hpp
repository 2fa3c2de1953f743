#pragma once

// Oriented lens spaces. Convention: -p surgery on the unknot is L(p, 1).
// L(1, 0) is S^3.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lenslab {

class LensSpace {
 public:
  /// Reduces q into [0, p). Throws std::invalid_argument if p <= 0 or,
  /// for p > 1, gcd(p, q) != 1.
  static LensSpace canonical(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_sphere() const { return p_ == 1; }

  /// "L(7,2)"
  std::string to_string() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  friend auto operator<=>(const LensSpace&, const LensSpace&) = default;

 private:
  LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

/// Spin^c label i in Z/p, stored reduced into [0, p).
struct SpincLabel {
  std::int64_t value;

  static SpincLabel reduce(std::int64_t i, std::int64_t p);
  friend bool operator==(const SpincLabel&, const SpincLabel&) = default;
};

inline LensSpace canonical(std::int64_t p, std::int64_t q) { return LensSpace::canonical(p, q); }

/// Same manifold, opposite orientation: L(p, p - q).
LensSpace reverse(const LensSpace& y);

/// Orientation-preserving homeomorphism: equal p and q2 = q1 or q1 q2 = 1 (mod p).
bool oriented_homeo(const LensSpace& a, const LensSpace& b);

/// Smallest q among {q, q^-1 mod p}.
LensSpace class_representative(const LensSpace& y);

/// One representative per oriented class of L(p, *), ascending q.
std::vector<LensSpace> enumerate_classes(std::int64_t p);

}  // namespace lenslab
