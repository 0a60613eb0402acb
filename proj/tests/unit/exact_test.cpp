#include <gtest/gtest.h>

#include <random>

#include "facstat/error.hpp"
#include "facstat/upoly.hpp"
#include "oracles.hpp"

namespace facstat {
namespace {

Rational random_rational(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return Rational(num(g), den(g));
}

UPoly random_poly(std::mt19937_64& g, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> cs(static_cast<std::size_t>(deg(g)) + 1);
  for (auto& c : cs) c = random_rational(g);
  return UPoly(Var::U, cs);
}

TEST(Rational, ReducesToLowestTerms) {
  const Rational r(BigInt(6), BigInt(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("40/27"), Rational(40, 27));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("4/2").str(), "2");
  EXPECT_EQ(Rational(-1, 2).str(), "-1/2");
  EXPECT_THROW(Rational::parse("1/0"), InvalidArgumentError);
  EXPECT_THROW(Rational::parse("a/b"), InvalidArgumentError);
  EXPECT_THROW(Rational::parse(""), InvalidArgumentError);
  EXPECT_THROW(Rational(1) / Rational(0), InvalidArgumentError);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
  auto& g = oracle::rng();
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational(g), b = random_rational(g), c = random_rational(g);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const Rational prod = a * b - c;
    EXPECT_EQ(gcd(prod.numerator(), prod.denominator()), 1);
    EXPECT_GT(prod.denominator(), 0);
  }
}

TEST(Rational, FactorialOutgrowsFixedWidth) {
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
}

TEST(UPoly, DifferenceOfSquares) {
  const UPoly a(Var::U, {1, 1});
  const UPoly b(Var::U, {1, -1});
  EXPECT_EQ(poly_arith(a, b, PolyOp::Mul), UPoly(Var::U, {1, 0, -1}));
}

TEST(UPoly, AdditiveIdentityAndNormalization) {
  const UPoly p(Var::U, {Rational(1, 3), 0, 2});
  EXPECT_EQ(poly_arith(UPoly(Var::U), p, PolyOp::Add), p);
  const UPoly cancel = poly_arith(p, p, PolyOp::Sub);
  EXPECT_TRUE(cancel.is_zero());
  EXPECT_EQ(cancel.degree(), -1);
  EXPECT_EQ(UPoly(Var::U, {1, 0, 0}).degree(), 0);
}

TEST(UPoly, ScalarPath) {
  const UPoly q2_minus_q(Var::Q, {0, -1, 1});
  EXPECT_EQ(q2_minus_q * Rational(1, 2), UPoly(Var::Q, {0, Rational(-1, 2), Rational(1, 2)}));
}

TEST(UPoly, TagMismatch) {
  const UPoly a(Var::U, {1});
  const UPoly b(Var::Q, {1});
  EXPECT_THROW(poly_arith(a, b, PolyOp::Add), TagMismatchError);
  EXPECT_THROW(poly_arith(a, b, PolyOp::Mul), TagMismatchError);
}

TEST(UPoly, Eval) {
  EXPECT_EQ(UPoly(Var::U, {1, -1}).eval(Rational(1)), Rational(0));
  EXPECT_EQ(UPoly(Var::U, {0, 2, 1}).eval(Rational(1, 3)), Rational(7, 9));
  // E_3(Q) = 2u + u^2 at q = 1 is C(3,2).
  EXPECT_EQ(UPoly(Var::U, {0, 2, 1}).eval(Rational(1)), Rational(3));
}

TEST(UPoly, EvalIsMultiplicative) {
  auto& g = oracle::rng();
  for (int trial = 0; trial < 200; ++trial) {
    const UPoly a = random_poly(g, 6), b = random_poly(g, 6);
    const Rational x = random_rational(g);
    EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
  }
}

TEST(UPoly, DividedByQPowerReverses) {
  // (q^2 - q)/2 / q^2 = 1/2 - u/2
  const UPoly m2(Var::Q, {0, Rational(-1, 2), Rational(1, 2)});
  EXPECT_EQ(m2.divided_by_q_power(2), UPoly(Var::U, {Rational(1, 2), Rational(-1, 2)}));
  EXPECT_THROW(m2.divided_by_q_power(1), InvalidArgumentError);
  EXPECT_THROW(UPoly(Var::U, {1}).divided_by_q_power(1), TagMismatchError);
}

TEST(UPoly, Pretty) {
  EXPECT_EQ(UPoly(Var::U, {0, 2, 1}).pretty(), "2/q + 1/q^2");
  EXPECT_EQ(UPoly(Var::U, {Rational(1, 2), Rational(-1, 2)}).pretty(), "1/2 - 1/(2*q)");
  EXPECT_EQ(UPoly(Var::Q, {0, Rational(-1, 2), Rational(1, 2)}).pretty(), "1/2*q^2 - 1/2*q");
  EXPECT_EQ(UPoly(Var::U).pretty(), "0");
}

TEST(UPoly, DivmodReconstructs) {
  auto& g = oracle::rng();
  for (int trial = 0; trial < 100; ++trial) {
    const UPoly n = random_poly(g, 8);
    UPoly d = random_poly(g, 4);
    if (d.is_zero()) continue;
    const auto [quot, rem] = divmod(n, d);
    EXPECT_EQ(quot * d + rem, n);
    EXPECT_LT(rem.degree(), d.degree() == 0 ? 0 : d.degree());
  }
}

TEST(SeriesExpand, GeometricSeries) {
  const UPoly one(Var::U, {1});
  EXPECT_EQ(series_expand(one, UPoly(Var::U, {1, -1}), 3), (std::vector<Rational>{1, 1, 1, 1}));
  EXPECT_EQ(series_expand(one, UPoly(Var::U, {1, 1}), 3), (std::vector<Rational>{1, -1, 1, -1}));
}

TEST(SeriesExpand, QuadraticExcessLimit) {
  const UPoly num1(Var::U, {Rational(1, 2), Rational(1, 2)});
  const UPoly den1 = UPoly(Var::U, {1, -1}) * UPoly(Var::U, {1, -1});
  const UPoly num2(Var::U, {Rational(1, 2), Rational(-1, 2)});
  const UPoly den2(Var::U, {1, 0, -1});
  const auto a = series_expand(num1, den1, 9);
  const auto b = series_expand(num2, den2, 9);
  std::vector<Rational> diff;
  for (std::size_t i = 0; i < a.size(); ++i) diff.push_back(a[i] - b[i]);
  EXPECT_EQ(diff, (std::vector<Rational>{0, 2, 2, 4, 4, 6, 6, 8, 8, 10}));
}

TEST(SeriesExpand, Errors) {
  EXPECT_THROW(series_expand(UPoly(Var::U, {1}), UPoly(Var::U, {0, 1}), 3), NonExpandableError);
  EXPECT_THROW(series_expand(UPoly(Var::Q, {1}), UPoly(Var::Q, {1}), 3), TagMismatchError);
}

TEST(SeriesExpand, OverOneIsPaddedPolynomial) {
  auto& g = oracle::rng();
  for (int trial = 0; trial < 50; ++trial) {
    const UPoly p = random_poly(g, 5);
    const auto s = series_expand(p, UPoly(Var::U, {1}), 8);
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(s[static_cast<std::size_t>(k)], p.coeff(k));
  }
}

TEST(SeriesExpand, InvertsMultiplication) {
  auto& g = oracle::rng();
  const int order = 10;
  for (int trial = 0; trial < 100; ++trial) {
    const UPoly n = random_poly(g, 5);
    UPoly d = random_poly(g, 4);
    if (d.coeff(0).is_zero()) d += UPoly(Var::U, {1});
    const auto s = series_expand(n, d, order);
    const UPoly product = UPoly(Var::U, s) * d;
    for (int k = 0; k <= order; ++k) EXPECT_EQ(product.coeff(k), n.coeff(k)) << "k=" << k;
  }
}

}  // namespace
}  // namespace facstat
