#include <gtest/gtest.h>

#include "facstat/class_function.hpp"
#include "facstat/error.hpp"
#include "facstat/lie_chars.hpp"
#include "oracles.hpp"

namespace facstat {
namespace {

BigInt hook_dim(const std::vector<int>& shape) {
  return BigInt(static_cast<unsigned long>(oracle::hook_length_dim(shape)));
}

TEST(SymChars, DimensionsMatchHookLengths) {
  for (int d = 1; d <= 9; ++d) {
    BigInt sum_sq = 0;
    for (const auto& shape : partitions_of(d)) {
      const BigInt f = hook_dim(shape.parts());
      EXPECT_EQ(irr_dim(shape), f);
      EXPECT_EQ(mn_character(shape, Partition::ones(d)), f);
      sum_sq += f * f;
    }
    EXPECT_EQ(sum_sq, factorial(static_cast<unsigned>(d)));
  }
  EXPECT_EQ(irr_dim(Partition({2, 1})), 2);
  EXPECT_EQ(irr_dim(Partition({3, 2})), 5);
}

TEST(SymChars, SmallValues) {
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({1, 1, 1})), 2);
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({2, 1})), 0);
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({3})), -1);
  EXPECT_EQ(mn_character(Partition({1, 1, 1}), Partition({2, 1})), -1);
  EXPECT_EQ(mn_character(Partition({3, 1}), Partition({2, 2})), -1);
  EXPECT_EQ(mn_character(Partition({2, 2}), Partition({3, 1})), -1);
  EXPECT_EQ(mn_character(Partition({2, 2}), Partition({4})), 0);
}

TEST(SymChars, TrivialAndSignShapes) {
  for (int d = 1; d <= 7; ++d) {
    EXPECT_EQ(irreducible_character(Partition({d})), builtin(Builtin::One, d));
    EXPECT_EQ(irreducible_character(Partition::ones(d)), builtin(Builtin::Sgn, d));
  }
}

TEST(SymChars, Orthonormality) {
  for (int d = 1; d <= 8; ++d) {
    const auto shapes = partitions_of(d);
    for (const auto& a : shapes) {
      const ClassFunction ca = irreducible_character(a);
      for (const auto& b : shapes) {
        EXPECT_EQ(inner(ca, irreducible_character(b)), Rational(a == b ? 1 : 0)) << a.str() << " " << b.str();
      }
    }
  }
}

TEST(SymChars, ColumnOrthogonality) {
  // sum_shape chi(lambda)^2 = z_lambda.
  for (int d = 1; d <= 7; ++d) {
    const auto set = PartitionSet::of(d);
    for (std::size_t i = 0; i < set->size(); ++i) {
      BigInt sum = 0;
      for (const auto& shape : set->partitions()) {
        const BigInt v = mn_character(shape, (*set)[i]);
        sum += v * v;
      }
      EXPECT_EQ(sum, set->z(i));
    }
  }
}

TEST(SymChars, InnerProductAgainstPermutationAverage) {
  // <P, 1> is the mean of P over all d! permutations.
  for (int d = 1; d <= 6; ++d) {
    const auto census = oracle::cycle_type_census(d);
    const ClassFunction r = builtin(Builtin::Roots, d);
    Rational sum = 0;
    for (const auto& [type, count] : census) sum += r.at(Partition(type)) * Rational(static_cast<long>(count));
    EXPECT_EQ(inner(r, builtin(Builtin::One, d)), sum / Rational(factorial(static_cast<unsigned>(d))));
    EXPECT_EQ(inner(r, builtin(Builtin::One, d)), Rational(1));
  }
}

TEST(SymChars, BuiltinValues) {
  const ClassFunction r = builtin(Builtin::Roots, 4);
  EXPECT_EQ(r.at(Partition({2, 1, 1})), Rational(2));
  EXPECT_EQ(r.at(Partition({4})), Rational(0));
  const ClassFunction q = builtin(Builtin::QuadraticExcess, 5);
  EXPECT_EQ(q.at(Partition({2, 2, 1})), Rational(-2));
  EXPECT_EQ(q.at(Partition({1, 1, 1, 1, 1})), Rational(10));
  EXPECT_EQ(q.at(Partition({3, 1, 1})), Rational(1));
  EXPECT_EQ(q.at(Partition({2, 1, 1, 1})), Rational(2));
  EXPECT_EQ(q.at(Partition({5})), Rational(0));
  const ClassFunction et = builtin(Builtin::EvenType, 4);
  EXPECT_EQ(et.at(Partition({2, 2})), Rational(1));
  EXPECT_EQ(et.at(Partition({3, 1})), Rational(1));
  EXPECT_EQ(et.at(Partition({2, 1, 1})), Rational(0));
  EXPECT_EQ(builtin("sgn", 3).at(Partition({2, 1})), Rational(-1));
  EXPECT_EQ(builtin("ET", 3), builtin(Builtin::EvenType, 3));
  EXPECT_THROW(builtin("nope", 3), InvalidArgumentError);
  EXPECT_EQ(indicator(Partition({2, 1})).at(Partition({2, 1})), Rational(1));
  EXPECT_EQ(indicator(Partition({2, 1})).at(Partition({3})), Rational(0));
}

TEST(SymChars, DecomposeRoots) {
  // R is the permutation character: trivial plus standard.
  const Decomposition a = decompose(builtin(Builtin::Roots, 4));
  for (const auto& shape : partitions_of(4)) {
    const Rational expected = (shape == Partition({4}) || shape == Partition({3, 1})) ? 1 : 0;
    EXPECT_EQ(a.of(shape), expected) << shape.str();
  }
}

TEST(SymChars, DecomposeEvenType) {
  const Decomposition a = decompose(builtin(Builtin::EvenType, 3));
  EXPECT_EQ(a.of(Partition({3})), Rational(1, 2));
  EXPECT_EQ(a.of(Partition({1, 1, 1})), Rational(1, 2));
  EXPECT_EQ(a.of(Partition({2, 1})), Rational(0));
}

TEST(SymChars, RandomRoundTrip) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 8;
    std::vector<Rational> values;
    for (std::size_t i = 0; i < PartitionSet::of(d)->size(); ++i) {
      values.emplace_back(num(oracle::rng()), den(oracle::rng()));
    }
    const ClassFunction x(d, values);
    EXPECT_EQ(reconstruct(decompose(x)), x);
  }
}

TEST(SymChars, LieCharacterInnerProducts) {
  EXPECT_EQ(inner(builtin(Builtin::Roots, 3), psi_table(3).row(1)), Rational(1));
  EXPECT_EQ(inner(builtin(Builtin::Sgn, 4), psi_table(4).row(2)), Rational(1));
}

TEST(SymChars, DegreeMismatch) {
  EXPECT_THROW(inner(builtin(Builtin::One, 3), builtin(Builtin::One, 4)), InvalidArgumentError);
  EXPECT_THROW(builtin(Builtin::One, 3) + builtin(Builtin::One, 4), InvalidArgumentError);
}

}  // namespace
}  // namespace facstat
