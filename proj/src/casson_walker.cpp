#include "lenslab/casson_walker.hpp"

#include <stdexcept>

#include "lenslab/number_theory.hpp"

namespace lenslab {

Rational lambda_rec(std::int64_t p, std::int64_t q) {
  const LensSpace y = LensSpace::canonical(p, q);
  Rational acc;
  bool negate = false;
  std::int64_t a = y.p(), b = y.q();
  while (a > 1) {
    const Integer ia = to_integer(a), ib = to_integer(b);
    const Rational term =
        Rational(1, 4) - Rational(ia * ia + ib * ib + 1, 12 * ia * ib);
    if (negate) acc -= term; else acc += term;
    negate = !negate;
    std::int64_t r = a % b;
    // lambda(b, r) = -lambda(b, b - r): keep the remainder at most b/2.
    if (r != 0 && 2 * r > b) {
      r = b - r;
      negate = !negate;
    }
    a = b;
    b = r;
  }
  return acc;
}

Rational lambda_cf(std::int64_t p, std::int64_t q) {
  const LensSpace y = LensSpace::canonical(p, q);
  if (y.is_sphere()) return Rational(0);
  Integer excess = 0;  // sum of (a_i - 3)
  for (const auto& run : hj_runs(y.p(), y.q())) {
    excess += (to_integer(run.value) - 3) * to_integer(run.count);
  }
  const Integer ip = to_integer(y.p());
  const Rational inner =
      Rational(to_integer(y.q()) + to_integer(mod_inverse(y.q(), y.p())), ip) +
      Rational(excess);
  return -inner / Rational(12);
}

LambdaValue casson_walker(const LensSpace& y, LambdaMethod method) {
  Rational v = method == LambdaMethod::Recursion ? lambda_rec(y.p(), y.q())
                                                 : lambda_cf(y.p(), y.q());
  return {y, std::move(v), method};
}

Rational delta(std::int64_t p, std::int64_t q) {
  const LensSpace y = LensSpace::canonical(p, q);
  return Rational(12) * (lambda_cf(y.p(), y.q()) - lambda_cf(y.p(), 1 % y.p()));
}

bool dcw_check(std::int64_t p, std::int64_t q, DMemo* memo) {
  const LensSpace y = LensSpace::canonical(p, q);
  return d_table(y, memo).sum() == Rational(y.p()) * lambda_rec(y.p(), y.q());
}

}  // namespace lenslab
