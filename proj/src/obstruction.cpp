#include "lenslab/obstruction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lenslab/casson_walker.hpp"
#include "lenslab/number_theory.hpp"

namespace lenslab {

namespace {

// Number of slots k in (-p/2, p/2] with |k| = j.
std::int64_t slot_multiplicity(std::int64_t p, std::int64_t j) {
  return (j == 0 || 2 * j == p) ? 1 : 2;
}

// Backtracking over h_{g-1}, ..., h_0 against a multiset of d-invariants.
class WitnessSearch {
 public:
  WitnessSearch(std::int64_t p, std::int64_t g, const EVector& e,
                std::map<Rational, std::int64_t> remaining, std::int64_t h_sum,
                std::size_t limit)
      : p_(p), g_(g), e_(e), remaining_(std::move(remaining)), target_(h_sum), limit_(limit) {
    h_.assign(static_cast<std::size_t>(p / 2 + 1), 0);
    // below_weight_[j] / below_cap_[j]: slot weight and capped sum over |k| < j.
    below_weight_.assign(static_cast<std::size_t>(g + 1), 0);
    below_cap_.assign(static_cast<std::size_t>(g + 1), 0);
    for (std::int64_t j = 1; j <= g; ++j) {
      const auto w = slot_multiplicity(p, j - 1);
      below_weight_[j] = below_weight_[j - 1] + w;
      below_cap_[j] = below_cap_[j - 1] + w * froyshov_cap(g, j - 1);
    }
  }

  std::vector<HVector> run() {
    descend(g_ - 1, 1, target_);
    return std::move(found_);
  }

  bool truncated() const { return truncated_; }

 private:
  void descend(std::int64_t j, std::int64_t floor_value, std::int64_t left) {
    if (found_.size() >= limit_) {
      truncated_ = true;
      return;
    }
    if (j < 0) {
      if (left == 0) found_.push_back({g_, h_});
      return;
    }
    const std::int64_t weight = slot_multiplicity(p_, j);
    const std::int64_t cap = froyshov_cap(g_, j);
    for (std::int64_t x = floor_value; x <= cap; ++x) {
      const std::int64_t rest = left - weight * x;
      // Slots below j carry at least x each (monotone) and at most their caps.
      if (rest < x * below_weight_[j]) break;
      if (rest > below_cap_[j]) continue;
      const Rational value = e_.at(j) + Rational(2 * x);
      auto it = remaining_.find(value);
      if (it == remaining_.end() || it->second < weight) continue;
      it->second -= weight;
      h_[static_cast<std::size_t>(j)] = x;
      descend(j - 1, x, rest);
      h_[static_cast<std::size_t>(j)] = 0;
      it->second += weight;
    }
  }

  std::int64_t p_;
  std::int64_t g_;
  const EVector& e_;
  std::map<Rational, std::int64_t> remaining_;
  std::int64_t target_;
  std::size_t limit_;
  std::vector<std::int64_t> h_;
  std::vector<std::int64_t> below_weight_;
  std::vector<std::int64_t> below_cap_;
  std::vector<HVector> found_;
  bool truncated_ = false;
};

bool is_square(const Integer& n) { return n >= 0 && exact_sqrt(n).has_value(); }

SquareVerdict square_pair(std::int64_t p, Integer first, Integer second, const char* first_expr,
                          const char* second_expr) {
  SquareVerdict v;
  v.p = p;
  v.first = std::move(first);
  v.second = std::move(second);
  v.first_square = is_square(v.first);
  v.second_square = is_square(v.second);
  std::ostringstream why;
  if (v.first_square && v.second_square) {
    v.status = SquareStatus::SquaresPass;
    why << first_expr << " = " << v.first << " and " << second_expr << " = " << v.second
        << " are both squares";
  } else {
    v.status = SquareStatus::Excluded;
    if (!v.first_square) {
      why << first_expr << " = " << v.first << " is not a square";
    } else {
      why << first_expr << " = " << v.first << " is a square but " << second_expr << " = "
          << v.second << " is not";
    }
  }
  v.reason = why.str();
  return v;
}

}  // namespace

std::int64_t froyshov_cap(std::int64_t g, std::int64_t i) {
  if (g < 0) {
    throw std::invalid_argument("froyshov_cap needs g >= 0");
  }
  const std::int64_t a = std::abs(i);
  if (a >= g) return 0;
  return (g - a + 1) / 2;
}

FeasibilityReport feasible_genera(const LensSpace& y, std::optional<std::int64_t> g_max) {
  ObstructionOptions options;
  options.g_max = g_max;
  return feasible_genera(y, options);
}

FeasibilityReport feasible_genera(const LensSpace& y, const ObstructionOptions& options) {
  const std::int64_t p = y.p();
  const std::int64_t genus_limit = (p + 1) / 2;
  std::int64_t g_max = genus_limit;
  if (options.g_max) {
    if (*options.g_max < 0) {
      throw std::invalid_argument("g_max must be nonnegative");
    }
    g_max = std::min(*options.g_max, genus_limit);
  }

  FeasibilityReport report;
  report.candidate = y;
  report.p = p;

  const EVector e(p);
  const DTable table = d_table(y, options.memo);
  const std::vector<Rational> d_values = table.multiset();
  report.matches_unknot = d_values == e.multiset();

  const Rational lambda_y = lambda_cf(p, y.q());
  const Rational lambda_unknot = lambda_cf(p, 1 % p);
  report.weighted_lambda_gap = Rational(p) * (lambda_y - lambda_unknot);

  std::vector<std::string> notes;
  if (report.matches_unknot) {
    notes.push_back("g=0: d-invariants coincide with L(p,1), i.e. unknot surgery");
  }

  // sum over slots of h_{|k|} = h_0 + 2 (h_1 + ... + h_{g-1}).
  std::optional<std::int64_t> h_sum;
  const Rational& gap = report.weighted_lambda_gap;
  if (gap.is_integer() && gap.sign() >= 0 && gap.numerator() % 2 == 0) {
    h_sum = to_int64(gap.numerator() / 2);
  } else {
    notes.push_back("pre-filter: p(lambda(Y) - lambda(L(p,1))) = " + gap.to_string() +
                    " is not a nonnegative even integer; no genus passes");
  }

  if (h_sum) {
    std::map<Rational, std::int64_t> counts;
    for (const auto& v : d_values) ++counts[v];

    for (std::int64_t g = 1; g <= g_max; ++g) {
      // h_j in [1, cap] for j < g gives 2g - 1 <= sum <= g(g + 1) / 2.
      if (*h_sum < 2 * g - 1 || 2 * *h_sum > g * (g + 1)) continue;

      auto remaining = counts;
      bool consistent = true;
      for (std::int64_t j = g; j <= p / 2 && consistent; ++j) {
        auto it = remaining.find(e.at(j));
        const std::int64_t w = slot_multiplicity(p, j);
        if (it == remaining.end() || it->second < w) {
          consistent = false;
        } else {
          it->second -= w;
        }
      }
      if (!consistent) continue;

      WitnessSearch search(p, g, e, std::move(remaining), *h_sum,
                           options.max_witnesses_per_genus);
      auto found = search.run();
      if (search.truncated()) report.truncated = true;
      for (auto& w : found) {
        if (auto problem = validate_witness(y, w, options.memo)) {
          throw std::logic_error("witness search produced an invalid h-vector for " +
                                 y.to_string() + ": " + *problem);
        }
        report.feasible.push_back(std::move(w));
      }
    }
  }

  if (!report.feasible.empty()) {
    report.minimal_genus = report.feasible.front().g;
    report.theorem1_ok = p <= 4 * *report.minimal_genus + 3;
    notes.push_back("feasible genera passed the necessary conditions; realizability is not claimed");
  }
  if (report.truncated) {
    notes.push_back("witness list truncated at " +
                    std::to_string(options.max_witnesses_per_genus) + " per genus");
  }
  if (!y.is_sphere() && (p % 6 == 2 || p % 6 == 4) &&
      oriented_homeo(y, LensSpace::canonical(p, 3))) {
    notes.push_back("L(p,3) with p = 2,4 mod 6: decided by the full multiset test");
  }

  std::ostringstream joined;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) joined << "; ";
    joined << notes[i];
  }
  report.notes = joined.str();
  return report;
}

std::optional<std::string> validate_witness(const LensSpace& y, const HVector& w, DMemo* memo) {
  const std::int64_t p = y.p();
  const std::int64_t g = w.g;
  if (g < 0) return "negative genus";
  if (w.h.size() != static_cast<std::size_t>(p / 2 + 1)) {
    return "h-vector must have floor(p/2) + 1 entries";
  }
  if (p < 2 * g - 1) return "p < 2g - 1";
  for (std::size_t j = 0; j < w.h.size(); ++j) {
    const auto hj = w.h[j];
    const auto sj = static_cast<std::int64_t>(j);
    if (sj < g && hj < 1) return "h_" + std::to_string(j) + " must be nonzero for |k| < g";
    if (sj >= g && hj != 0) return "h_" + std::to_string(j) + " must vanish for |k| >= g";
    if (j + 1 < w.h.size() && w.h[j + 1] > hj) return "h is not monotone at " + std::to_string(j);
    if (hj > froyshov_cap(g, sj)) return "h_" + std::to_string(j) + " exceeds its cap";
  }
  std::vector<Rational> predicted;
  predicted.reserve(static_cast<std::size_t>(p));
  for (auto k : slot_range(p)) {
    predicted.push_back(e_invariant(p, k) + Rational(2 * w.h[static_cast<std::size_t>(std::abs(k))]));
  }
  std::sort(predicted.begin(), predicted.end());
  if (predicted != d_multiset(y, memo)) return "multiset {E(p,k) + 2h} differs from d(Y)";
  return std::nullopt;
}

std::string Theorem1Verdict::describe() const {
  switch (status) {
    case Theorem1Status::NotRealizable:
      return "not realizable by a nontrivial knot";
    case Theorem1Status::BoundHolds:
      return "bound holds (p=" + std::to_string(p) + " <= 4g+3=" + std::to_string(4 * *genus + 3) +
             (equality ? ", equality)" : ")");
    case Theorem1Status::BoundViolated:
      return "bound violated (p=" + std::to_string(p) + " > 4g+3=" +
             std::to_string(4 * *genus + 3) + ")";
  }
  return {};
}

Theorem1Verdict theorem1_verdict(const FeasibilityReport& report) {
  Theorem1Verdict v;
  v.p = report.p;
  if (!report.minimal_genus) {
    v.status = Theorem1Status::NotRealizable;
    return v;
  }
  v.genus = report.minimal_genus;
  const std::int64_t bound = 4 * *v.genus + 3;
  v.status = report.p <= bound ? Theorem1Status::BoundHolds : Theorem1Status::BoundViolated;
  v.equality = report.p == bound;
  return v;
}

Theorem1Verdict theorem1_check(const LensSpace& y, DMemo* memo) {
  ObstructionOptions options;
  options.memo = memo;
  return theorem1_verdict(feasible_genera(y, options));
}

SquareVerdict square_obstruction_q2(std::int64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("square_obstruction_q2 needs odd p >= 3");
  }
  const Integer ip = to_integer(p);
  SquareVerdict v = square_pair(p, 2 * ip + 2, 2 * ip + 18, "2p+2", "2p+18");
  if (p <= 9) {
    v.status = SquareStatus::SmallCase;
    v.reason = "p <= 9: the square argument does not apply";
  }
  return v;
}

SquareVerdict square_obstruction_q3(std::int64_t p) {
  if (p < 2 || p % 3 == 0) {
    throw std::invalid_argument("square_obstruction_q3 needs p >= 2 prime to 3");
  }
  const Integer ip = to_integer(p);
  const std::int64_t r = p % 6;
  if (r == 2 || r == 4) {
    SquareVerdict v;
    v.status = SquareStatus::Unprinted;
    v.p = p;
    v.reason = "p = 2,4 mod 6: no square condition; decided by the full multiset test";
    return v;
  }
  SquareVerdict v = r == 1 ? square_pair(p, 6 * ip + 3, 6 * ip + 27, "6p+3", "6p+27")
                           : square_pair(p, 2 * ip + 3, 2 * ip + 27, "2p+3", "2p+27");
  const bool small = r == 1 ? p <= 14 : p < 11;
  if (small) {
    v.status = SquareStatus::SmallCase;
    v.reason = "p below the range of the square argument";
  }
  return v;
}

Rational d_borromean(std::int64_t n, std::int64_t k, std::int64_t g) {
  if (n <= 0 || g < 0) {
    throw std::invalid_argument("d_borromean needs n > 0 and g >= 0");
  }
  return e_invariant(n, k) - Rational(g) + Rational(2 * froyshov_cap(g, k));
}

std::string to_string(SquareStatus s) {
  switch (s) {
    case SquareStatus::Excluded: return "excluded";
    case SquareStatus::SmallCase: return "small-case";
    case SquareStatus::SquaresPass: return "squares-pass";
    case SquareStatus::Unprinted: return "unprinted";
  }
  return {};
}

std::string to_string(Theorem1Status s) {
  switch (s) {
    case Theorem1Status::NotRealizable: return "not-realizable";
    case Theorem1Status::BoundHolds: return "bound-holds";
    case Theorem1Status::BoundViolated: return "bound-violated";
  }
  return {};
}

}  // namespace lenslab
