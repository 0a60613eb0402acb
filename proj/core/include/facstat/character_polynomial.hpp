#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "facstat/class_function.hpp"

namespace facstat {

/// A polynomial in the part-count functions x_1, x_2, ... with rational
/// coefficients, stored as raw monomials.
class CharacterPolynomial {
 public:
  struct Term {
    Rational coeff;
    /// j -> e_j for the monomial prod x_j^{e_j}; exponents are positive.
    std::map<int, int> exponents;
  };

  CharacterPolynomial() = default;

  static CharacterPolynomial constant(const Rational& c);
  /// x_j, j >= 1.
  static CharacterPolynomial variable(int j);
  /// C(x_j, b) = x_j (x_j - 1) ... (x_j - b + 1) / b!, expanded into monomials.
  static CharacterPolynomial binomial(int j, int b);

  /// Parses expressions such as "binom(x1,2) - x2", "x1^2/2 - 3*x1*x2 + 1/3".
  /// Operators: + - * / ^ and parentheses; '/' and '^' take constant
  /// right operands. Throws InvalidArgumentError on malformed input.
  static CharacterPolynomial parse(std::string_view text);

  std::vector<Term> terms() const;
  bool is_zero() const { return terms_.empty(); }
  /// Largest j with x_j present, 0 for constants.
  int max_variable() const;

  Rational eval(const Partition& lambda) const;

  CharacterPolynomial& operator+=(const CharacterPolynomial& o);
  CharacterPolynomial& operator-=(const CharacterPolynomial& o);
  CharacterPolynomial& operator*=(const CharacterPolynomial& o);
  CharacterPolynomial& operator*=(const Rational& c);
  friend CharacterPolynomial operator+(CharacterPolynomial a, const CharacterPolynomial& b) { return a += b; }
  friend CharacterPolynomial operator-(CharacterPolynomial a, const CharacterPolynomial& b) { return a -= b; }
  friend CharacterPolynomial operator*(CharacterPolynomial a, const CharacterPolynomial& b) { return a *= b; }
  friend CharacterPolynomial operator*(CharacterPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const CharacterPolynomial& a, const CharacterPolynomial& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. "1/2*x1^2 - 1/2*x1 - x2".
  std::string str() const;

 private:
  void prune();

  std::map<std::map<int, int>, Rational> terms_;
};

/// The class function lambda -> P(lambda) on partitions of d (d >= 1).
ClassFunction cp_eval(const CharacterPolynomial& p, int d);

}  // namespace facstat
