#pragma once

// Casson-Walker invariants of lens spaces, computed two independent ways:
//
//  * reciprocity:  lambda(p, q) = 1/4 - (p^2 + q^2 + 1) / (12pq) - lambda(q, p),
//                  lambda(1, 0) = 0, lambda(p, -q) = -lambda(p, q);
//  * continued fraction:
//                  lambda(p, q) = -(q/p + q'/p + sum_i (a_i - 3)) / 12,
//                  with p/q = [a_1, ..., a_n] and q q' = 1 (mod p).
//
// Both routes are Euclid-length work, so p around 10^12 is cheap.

#include <cstdint>

#include "lenslab/d_invariant.hpp"
#include "lenslab/lens_space.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

enum class LambdaMethod { Recursion, ContinuedFraction };

struct LambdaValue {
  LensSpace space;
  Rational value;
  LambdaMethod method;
};

Rational lambda_rec(std::int64_t p, std::int64_t q);
Rational lambda_cf(std::int64_t p, std::int64_t q);
LambdaValue casson_walker(const LensSpace& y, LambdaMethod method);

/// 12 (lambda(p, q) - lambda(p, 1)).
Rational delta(std::int64_t p, std::int64_t q);

/// Sum of the d-invariants of L(p, q) equals p * lambda(p, q).
bool dcw_check(std::int64_t p, std::int64_t q, DMemo* memo = nullptr);

}  // namespace lenslab
