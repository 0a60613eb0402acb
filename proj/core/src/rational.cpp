#include "facstat/rational.hpp"

#include <ostream>

#include "facstat/error.hpp"

namespace facstat {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InvalidArgumentError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_text(num)) {
    throw InvalidArgumentError("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_text(den)) {
    throw InvalidArgumentError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw ConsistencyError("expected an integer, got " + str());
  return value_.get_num();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgumentError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational pow(const Rational& base, int exponent) {
  Rational result(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

}  // namespace facstat
