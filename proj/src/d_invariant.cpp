#include "lenslab/d_invariant.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "lenslab/number_theory.hpp"

namespace lenslab {

namespace {

// 1/4 - (2i + 1 - p - q)^2 / (4pq)
Rational recursion_term(std::int64_t p, std::int64_t q, std::int64_t i) {
  const Integer pq = to_integer(p) * to_integer(q);
  const Integer t = to_integer(2 * i + 1) - to_integer(p) - to_integer(q);
  return Rational(pq - t * t, 4 * pq);
}

std::vector<Rational> build_table(std::int64_t p, std::int64_t q, DMemo* memo);

DMemo::Table table_for(std::int64_t p, std::int64_t q, DMemo* memo) {
  if (memo) {
    if (auto hit = memo->find(p, q)) return hit;
    return memo->insert(p, q, build_table(p, q, memo));
  }
  return std::make_shared<const std::vector<Rational>>(build_table(p, q, nullptr));
}

std::vector<Rational> build_table(std::int64_t p, std::int64_t q, DMemo* memo) {
  if (p == 1) {
    return {Rational(0)};
  }
  const auto lower = table_for(q, p % q, memo);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) {
    out.push_back(recursion_term(p, q, i) - (*lower)[static_cast<std::size_t>(i % q)]);
  }
  return out;
}

}  // namespace

DMemo::Table DMemo::find(std::int64_t p, std::int64_t q) const {
  std::shared_lock lock(mutex_);
  auto it = tables_.find({p, q});
  return it == tables_.end() ? nullptr : it->second;
}

DMemo::Table DMemo::insert(std::int64_t p, std::int64_t q, std::vector<Rational> values) {
  auto table = std::make_shared<const std::vector<Rational>>(std::move(values));
  std::unique_lock lock(mutex_);
  return tables_.try_emplace({p, q}, std::move(table)).first->second;
}

std::size_t DMemo::size() const {
  std::shared_lock lock(mutex_);
  return tables_.size();
}

std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, DMemo::Table>> DMemo::entries()
    const {
  std::shared_lock lock(mutex_);
  return {tables_.begin(), tables_.end()};
}

DTable::DTable(LensSpace space, DMemo::Table values)
    : space_(space), values_(std::move(values)) {
  if (!values_ || values_->size() != static_cast<std::size_t>(space_.p())) {
    throw std::invalid_argument("d-table for " + space_.to_string() + " must have p entries");
  }
}

const Rational& DTable::operator[](std::int64_t i) const {
  return at(SpincLabel::reduce(i, space_.p()));
}

std::vector<Rational> DTable::multiset() const {
  std::vector<Rational> out = *values_;
  std::sort(out.begin(), out.end());
  return out;
}

Rational DTable::sum() const {
  Rational s;
  for (const auto& v : *values_) s += v;
  return s;
}

Rational d_invariant(std::int64_t p, std::int64_t q, std::int64_t i) {
  const LensSpace y = LensSpace::canonical(p, q);
  // Iterative form of the recursion: alternate signs down the Euclid chain.
  Rational acc;
  bool negate = false;
  std::int64_t a = y.p(), b = y.q(), label = SpincLabel::reduce(i, a).value;
  while (a > 1) {
    const Rational term = recursion_term(a, b, label);
    if (negate) acc -= term; else acc += term;
    negate = !negate;
    label %= b;
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return acc;
}

Rational d_closed(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (q != 1 && q != 2) {
    throw std::invalid_argument("d_closed only covers q = 1 and q = 2");
  }
  const LensSpace y = LensSpace::canonical(p, q);  // validates coprimality
  if (y.p() == 1) return Rational(0);
  if (y.q() != q) {
    throw std::invalid_argument("d_closed needs q < p");
  }
  const Integer ip = to_integer(p);
  if (q == 1) {
    // (1 - (2i - p)^2 / p) / 4
    const Integer t = to_integer(2 * i) - ip;
    return Rational(ip - t * t, 4 * ip);
  }
  const Integer t = to_integer(2 * i) - ip - 1;
  if (i % 2 == 0) {
    // (2 - (2i - p - 1)^2 / (2p)) / 4
    return Rational(4 * ip - t * t, 8 * ip);
  }
  // -(2i - p - 1)^2 / (8p)
  return Rational(-(t * t), 8 * ip);
}

DTable d_table(const LensSpace& y, DMemo* memo) {
  return DTable(y, table_for(y.p(), y.q(), memo));
}

std::vector<Rational> d_multiset(const LensSpace& y, DMemo* memo) {
  return d_table(y, memo).multiset();
}

std::vector<std::int64_t> slot_range(std::int64_t p) {
  if (p <= 0) {
    throw std::invalid_argument("slot_range needs p >= 1");
  }
  // (-p/2, p/2] contains -(p - 1)/2 .. p/2 (integer division).
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(p));
  for (std::int64_t k = -((p - 1) / 2); k <= p / 2; ++k) out.push_back(k);
  return out;
}

Rational grading_shift(std::int64_t p, std::int64_t i) {
  if (p <= 0) {
    throw std::invalid_argument("grading_shift needs p >= 1");
  }
  const Integer ip = to_integer(p);
  const Integer t = to_integer(2) * to_integer(i) - ip;
  return Rational(ip - t * t, 4 * ip);
}

Rational e_invariant(std::int64_t p, std::int64_t k) {
  if (p <= 0) {
    throw std::invalid_argument("e_invariant needs p >= 1");
  }
  // The maximizing representative of k is the one nearest p/2, which lies
  // at distance p - 2|k'| where k' is the slot of k.
  std::int64_t slot = k % p;
  if (slot < 0) slot += p;
  if (2 * slot > p) slot -= p;
  return grading_shift(p, slot < 0 ? p + slot : slot);
}

EVector::EVector(std::int64_t p) : p_(p), slots_(slot_range(p)) {
  values_.reserve(slots_.size());
  for (auto k : slots_) values_.push_back(e_invariant(p, k));
}

const Rational& EVector::at(std::int64_t k) const {
  std::int64_t slot = k % p_;
  if (slot < 0) slot += p_;
  if (2 * slot > p_) slot -= p_;
  return values_[static_cast<std::size_t>(slot + (p_ - 1) / 2)];
}

std::vector<Rational> EVector::multiset() const {
  std::vector<Rational> out = values_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lenslab
