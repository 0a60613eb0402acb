#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "facstat/rational.hpp"

namespace facstat {

/// Formal variable of a UPoly: q itself, or u = 1/q.
enum class Var { Q, U };

/// Dense univariate polynomial with rational coefficients.
///
/// Coefficient i multiplies var^i. The coefficient list never has a trailing
/// zero, so the zero polynomial has an empty list and degree -1. Arithmetic
/// between polynomials in different variables throws TagMismatchError.
class UPoly {
 public:
  explicit UPoly(Var var = Var::U) : var_(var) {}
  UPoly(Var var, std::vector<Rational> coeffs);
  UPoly(Var var, std::initializer_list<Rational> coeffs)
      : UPoly(var, std::vector<Rational>(coeffs)) {}

  static UPoly constant(Var var, const Rational& c);
  /// c * var^k.
  static UPoly monomial(Var var, const Rational& c, int k);

  Var var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of var^k; zero outside the stored range.
  Rational coeff(int k) const;

  Rational eval(const Rational& x) const;

  /// Interprets *this as a polynomial in q of degree <= total_degree and
  /// returns p(q) / q^total_degree as a polynomial in u.
  UPoly divided_by_q_power(int total_degree) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) { UPoly r = a; r *= b; return r; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  UPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  /// Human-readable rendering in powers of the variable, e.g. "2/q + 1/q^2"
  /// for a U polynomial and "1/2*q^2 - 1/2*q" for a Q polynomial.
  std::string pretty() const;

 private:
  void normalize();
  void require_same_var(const UPoly& o) const;

  Var var_;
  std::vector<Rational> coeffs_;
};

enum class PolyOp { Add, Sub, Mul };

UPoly poly_arith(const UPoly& a, const UPoly& b, PolyOp op);

/// Quotient and remainder of exact long division; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& numer, const UPoly& denom);

/// Power-series coefficients c_0..c_order of numer/denom, both in U.
/// Throws NonExpandableError when denom has zero constant term.
std::vector<Rational> series_expand(const UPoly& numer, const UPoly& denom, int order);

}  // namespace facstat
