#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace facstat {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(implicit)
  Rational(int value) : value_(value) {}   // NOLINT(implicit)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(long numerator, long denominator);

  /// Parses "a", "-a", "a/b". Throws InvalidArgumentError on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Throws ConsistencyError if the value is not an integer.
  BigInt to_integer() const;

  /// "a/b", or "a" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws InvalidArgumentError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as a big integer.
BigInt factorial(unsigned n);

/// Exact power base^exponent, exponent may be negative for nonzero base.
Rational pow(const Rational& base, int exponent);

}  // namespace facstat
