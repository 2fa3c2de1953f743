#include "lenslab/rational.hpp"

#include <limits>
#include <stdexcept>

namespace lenslab {

Integer to_integer(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
  return Integer(static_cast<long>(v));
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) {
    throw std::overflow_error("integer " + v.get_str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v.get_si());
}

Rational::Rational(std::int64_t n) : value_(to_integer(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(to_integer(num), to_integer(den)) {}

Rational::Rational(const Integer& n) : value_(n) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string_view::npos) {
      num = Integer(std::string(text), 10);
    } else {
      num = Integer(std::string(text.substr(0, slash)), 10);
      den = Integer(std::string(text.substr(slash + 1)), 10);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) {
    throw std::domain_error("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace lenslab
