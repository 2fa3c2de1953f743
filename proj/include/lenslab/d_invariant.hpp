#pragma once

// Heegaard Floer d-invariants of lens spaces.
//
// For coprime p > q > 0 and a label i reduced into [0, p),
//
//   d(p, q, i) = 1/4 - (2i + 1 - p - q)^2 / (4pq) - d(q, p mod q, i mod q),
//
// with d(1, 0, 0) = 0 (S^3). The recursion follows the Euclidean chain of
// (p, q), so a single value costs O(log p) rational operations and a full
// table of p values costs O(p + q + ...) when the lower levels are shared.

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "lenslab/lens_space.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

/// Thread-safe store of complete d-tables keyed by canonical (p, q).
///
/// Concurrent fills of the same key are allowed; the first insert wins and
/// later inserts of the (identical) value are dropped.
class DMemo {
 public:
  using Table = std::shared_ptr<const std::vector<Rational>>;

  Table find(std::int64_t p, std::int64_t q) const;
  Table insert(std::int64_t p, std::int64_t q, std::vector<Rational> values);
  std::size_t size() const;

  /// Snapshot ordered by (p, q).
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, Table>> entries() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, Table> tables_;
};

/// All p d-invariants of one lens space, indexed by Spin^c label.
class DTable {
 public:
  DTable(LensSpace space, DMemo::Table values);

  const LensSpace& space() const { return space_; }
  const Rational& at(SpincLabel label) const { return (*values_)[label.value]; }
  /// Any integer label; reduced mod p.
  const Rational& operator[](std::int64_t i) const;
  const std::vector<Rational>& values() const { return *values_; }
  std::size_t size() const { return values_->size(); }

  /// Values sorted ascending.
  std::vector<Rational> multiset() const;
  Rational sum() const;

 private:
  LensSpace space_;
  DMemo::Table values_;
};

/// d(L(p, q), s_i). Throws std::invalid_argument for p < 1 or gcd(p, q) != 1.
Rational d_invariant(std::int64_t p, std::int64_t q, std::int64_t i);

/// Closed forms for q = 1 and q = 2, for cross-checking the recursion.
Rational d_closed(std::int64_t p, std::int64_t q, std::int64_t i);

DTable d_table(const LensSpace& y, DMemo* memo = nullptr);

/// Sorted multiset {d(p, q, i) : 0 <= i < p}.
std::vector<Rational> d_multiset(const LensSpace& y, DMemo* memo = nullptr);

/// Slots k in (-p/2, p/2], ascending. One slot per residue class mod p.
std::vector<std::int64_t> slot_range(std::int64_t p);

/// Grading shift of the surgery cobordism, (1 - (2i - p)^2 / p) / 4.
Rational grading_shift(std::int64_t p, std::int64_t i);

/// E(p, k): the largest grading_shift(p, i) over i = k (mod p).
Rational e_invariant(std::int64_t p, std::int64_t k);

/// E(p, k) for every slot k of slot_range(p).
class EVector {
 public:
  explicit EVector(std::int64_t p);

  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& slots() const { return slots_; }
  /// Any integer k; reduced to its slot.
  const Rational& at(std::int64_t k) const;
  std::vector<Rational> multiset() const;

 private:
  std::int64_t p_;
  std::vector<std::int64_t> slots_;
  std::vector<Rational> values_;  // parallel to slots_
};

}  // namespace lenslab
