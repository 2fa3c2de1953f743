#include "lenslab/number_theory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lenslab {

namespace {

using i128 = __int128;

void require_hj_input(std::int64_t p, std::int64_t q) {
  if (!(p > q && q > 0) || gcd(p, q) != 1) {
    throw std::invalid_argument("continued fraction needs coprime p > q > 0, got p=" +
                                std::to_string(p) + " q=" + std::to_string(q));
  }
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) {
    throw std::invalid_argument("gcd(0, 0) is undefined");
  }
  // Work in unsigned magnitude so INT64_MIN does not overflow.
  auto ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  auto ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  while (ub != 0) {
    ua %= ub;
    std::swap(ua, ub);
  }
  if (ua > static_cast<std::uint64_t>(INT64_MAX)) {
    throw std::overflow_error("gcd does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(ua);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) {
    throw std::invalid_argument("gcd(0, 0) is undefined");
  }
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t mod_inverse(std::int64_t q, std::int64_t p) {
  if (p < 1) {
    throw std::invalid_argument("mod_inverse needs p >= 1");
  }
  if (p == 1) {
    return 1;
  }
  std::int64_t a = q % p;
  if (a < 0) a += p;
  if (a == 0 || gcd(a, p) != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(q) + " is not a unit mod " +
                                std::to_string(p));
  }
  // Extended Euclid; Bezout coefficients stay bounded by p.
  i128 old_r = a, r = p;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  i128 inv = old_s % p;
  if (inv <= 0) inv += p;
  return static_cast<std::int64_t>(inv);
}

CFExpansion::CFExpansion(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("continued fraction must have at least one term");
  }
  for (auto a : terms_) {
    if (a < 2) {
      throw std::invalid_argument("Hirzebruch-Jung terms must be >= 2");
    }
  }
}

CFExpansion CFExpansion::reversed() const {
  std::vector<std::int64_t> r(terms_.rbegin(), terms_.rend());
  return CFExpansion(std::move(r));
}

std::string CFExpansion::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << ", ";
    os << terms_[i];
  }
  os << ']';
  return os.str();
}

std::vector<CFRun> hj_runs(std::int64_t p, std::int64_t q) {
  require_hj_input(p, q);
  std::vector<CFRun> runs;
  auto push = [&runs](std::int64_t value, std::int64_t count) {
    if (!runs.empty() && runs.back().value == value) {
      runs.back().count += count;
    } else {
      runs.push_back({value, count});
    }
  };
  // p_i / q_i = a_i - q_{i+1} / p_{i+1} with a_i = ceil(p_i / q_i).
  i128 pp = p, qq = q;
  while (qq > 0) {
    const i128 a = (pp + qq - 1) / qq;
    if (a == 2) {
      // Each step with a = 2 maps (p, q) to (p - d, q - d) where d = p - q,
      // and a stays 2 while j * d <= q - d.
      const i128 d = pp - qq;
      const i128 steps = (qq - d) / d + 1;
      push(2, static_cast<std::int64_t>(steps));
      pp -= steps * d;
      qq -= steps * d;
    } else {
      push(static_cast<std::int64_t>(a), 1);
      const i128 next_q = a * qq - pp;
      pp = qq;
      qq = next_q;
    }
  }
  return runs;
}

CFExpansion hj_expand(std::int64_t p, std::int64_t q) {
  std::vector<std::int64_t> terms;
  for (const auto& run : hj_runs(p, q)) {
    terms.insert(terms.end(), static_cast<std::size_t>(run.count), run.value);
  }
  return CFExpansion(std::move(terms));
}

std::pair<std::int64_t, std::int64_t> hj_eval(const CFExpansion& cf) {
  const auto& t = cf.terms();
  i128 num = t.back(), den = 1;
  for (auto it = t.rbegin() + 1; it != t.rend(); ++it) {
    // a - den/num = (a * num - den) / num
    const i128 next = static_cast<i128>(*it) * num - den;
    den = num;
    num = next;
    if (num > INT64_MAX) {
      throw std::overflow_error("continued fraction numerator exceeds 64 bits");
    }
  }
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) {
    throw std::invalid_argument("exact_sqrt of a negative number");
  }
  if (n < 2) {
    return n;
  }
  // Newton from above: x_{k+1} = (x_k + n / x_k) / 2 decreases to floor(sqrt(n)).
  Integer x = Integer(1) << ((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2 + 1);
  while (true) {
    Integer y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  if (x * x == n) {
    return x;
  }
  return std::nullopt;
}

}  // namespace lenslab
