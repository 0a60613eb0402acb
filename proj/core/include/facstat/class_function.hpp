#pragma once

#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "facstat/partition.hpp"
#include "facstat/rational.hpp"

namespace facstat {

/// A rational-valued function on the partitions of d (equivalently a class
/// function on S_d). Values are stored in PartitionSet order.
class ClassFunction {
 public:
  /// The zero function on partitions of d.
  explicit ClassFunction(int d);
  /// values.size() must equal p(d).
  ClassFunction(int d, std::vector<Rational> values);

  static ClassFunction from(int d, const std::function<Rational(const Partition&)>& f);

  int degree() const { return set_->degree(); }
  const PartitionSet& partitions() const { return *set_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& at(const Partition& lambda) const { return values_[set_->index_of(lambda)]; }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& c) { return a *= c; }
  friend ClassFunction operator*(const Rational& c, ClassFunction a) { return a *= c; }
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.degree() == b.degree() && a.values_ == b.values_;
  }

 private:
  void require_same_degree(const ClassFunction& o) const;

  std::shared_ptr<const PartitionSet> set_;
  std::vector<Rational> values_;
};

/// <P, X> = (1/d!) sum_sigma P(sigma) X(sigma) = sum_lambda P X / z_lambda.
/// Throws InvalidArgumentError when the degrees differ.
Rational inner(const ClassFunction& p, const ClassFunction& x);

/// chi_shape(cls) by border-strip removal, memoized process-wide.
BigInt mn_character(const Partition& shape, const Partition& cls);

/// f_shape = d! / prod(hook lengths).
BigInt irr_dim(const Partition& shape);

/// The irreducible character chi_shape as a class function.
ClassFunction irreducible_character(const Partition& shape);

/// Coefficients a_shape with X = sum a_shape chi_shape.
struct Decomposition {
  int d = 0;
  /// coeffs[i] belongs to shape PartitionSet::of(d)[i].
  std::vector<Rational> coeffs;

  const Rational& of(const Partition& shape) const;
};

Decomposition decompose(const ClassFunction& x);
ClassFunction reconstruct(const Decomposition& a);

enum class Builtin { One, Sgn, EvenType, Roots, QuadraticExcess };

/// one = 1, sgn, ET = (1 + sgn)/2, R = x_1, Q = C(x_1, 2) - x_2.
ClassFunction builtin(Builtin which, int d);
/// Name lookup: "one", "sgn", "ET", "R", "Q" (case-insensitive).
/// Throws InvalidArgumentError on an unknown name.
ClassFunction builtin(std::string_view name, int d);
/// 1 at lambda0, 0 elsewhere, on partitions of |lambda0|.
ClassFunction indicator(const Partition& lambda0);

}  // namespace facstat
