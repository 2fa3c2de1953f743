#include "lenslab/lens_space.hpp"

#include <algorithm>
#include <stdexcept>

#include "lenslab/number_theory.hpp"

namespace lenslab {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

LensSpace LensSpace::canonical(std::int64_t p, std::int64_t q) {
  if (p <= 0) {
    throw std::invalid_argument("lens space needs p >= 1, got " + std::to_string(p));
  }
  const std::int64_t r = floor_mod(q, p);
  if (p > 1 && gcd(p, r) != 1) {
    throw std::invalid_argument("L(" + std::to_string(p) + "," + std::to_string(q) +
                                ") needs gcd(p, q) = 1");
  }
  return LensSpace(p, r);
}

std::string LensSpace::to_string() const {
  return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

SpincLabel SpincLabel::reduce(std::int64_t i, std::int64_t p) {
  if (p <= 0) {
    throw std::invalid_argument("Spin^c label modulus must be positive");
  }
  return {floor_mod(i, p)};
}

LensSpace reverse(const LensSpace& y) { return LensSpace::canonical(y.p(), -y.q()); }

bool oriented_homeo(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p()) return false;
  if (a.is_sphere()) return true;
  return a.q() == b.q() || mod_inverse(a.q(), a.p()) == b.q();
}

LensSpace class_representative(const LensSpace& y) {
  if (y.is_sphere()) return y;
  return LensSpace::canonical(y.p(), std::min(y.q(), mod_inverse(y.q(), y.p())));
}

std::vector<LensSpace> enumerate_classes(std::int64_t p) {
  if (p <= 0) {
    throw std::invalid_argument("enumerate_classes needs p >= 1");
  }
  if (p == 1) {
    return {LensSpace::canonical(1, 0)};
  }
  std::vector<LensSpace> out;
  for (std::int64_t q = 1; q < p; ++q) {
    if (gcd(p, q) == 1 && q <= mod_inverse(q, p)) {
      out.push_back(LensSpace::canonical(p, q));
    }
  }
  return out;
}

}  // namespace lenslab
