#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "facstat/partition.hpp"

namespace facstat {

/// Element of F_q, encoded as sum c_i p^i over the coefficients of its
/// polynomial representative modulo the defining polynomial.
struct FqElement {
  std::uint32_t value = 0;
  friend auto operator<=>(const FqElement&, const FqElement&) = default;
};

/// The finite field F_q with q = p^n, built from table lookups.
class FqField {
 public:
  /// Largest supported field size; add/mul tables are q x q.
  static constexpr int kMaxOrder = 1024;

  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }
  /// Defining polynomial over F_p, coefficients low-to-high, monic of degree n.
  /// For n = 1 this is x (the "x - 0" convention of the prime field).
  const std::vector<int>& modulus() const { return modulus_; }

  FqElement zero() const { return {0}; }
  FqElement one() const { return {1}; }
  FqElement element(std::uint32_t index) const;

  FqElement add(FqElement a, FqElement b) const { return {add_[a.value * q_ + b.value]}; }
  FqElement sub(FqElement a, FqElement b) const { return add(a, neg(b)); }
  FqElement neg(FqElement a) const { return {neg_[a.value]}; }
  FqElement mul(FqElement a, FqElement b) const { return {mul_[a.value * q_ + b.value]}; }
  /// Throws InvalidArgumentError for zero.
  FqElement inv(FqElement a) const;
  FqElement pow(FqElement a, std::uint64_t e) const;
  FqElement frobenius(FqElement a) const { return pow(a, static_cast<std::uint64_t>(p_)); }

  // Raw tables for inner loops; indices are element values.
  std::span<const std::uint32_t> add_table() const { return add_; }
  std::span<const std::uint32_t> mul_table() const { return mul_; }
  std::span<const std::uint32_t> neg_table() const { return neg_; }
  std::span<const std::uint32_t> inv_table() const { return inv_; }

  FqField(int p, int n, std::vector<int> modulus);

 private:
  int p_;
  int n_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

using FieldPtr = std::shared_ptr<const FqField>;

/// Builds F_{p^n}. For n > 1 the modulus is the lexicographically smallest
/// monic irreducible of degree n, comparing (c_0, c_1, ..., c_{n-1}) as
/// integers in that order. Throws InvalidArgumentError if p is not prime,
/// n < 1, or p^n exceeds FqField::kMaxOrder.
FieldPtr field_make(int p, int n);

/// True iff the polynomial over F_p (coefficients low-to-high) is monic and
/// irreducible. Brute-force trial division; desk scale only.
bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p);

/// Monic polynomial over F_q, coefficients low-to-high.
class FqPoly {
 public:
  /// Throws InvalidArgumentError unless the leading coefficient is one.
  FqPoly(FieldPtr field, std::vector<FqElement> coeffs);

  /// The monic polynomial of the given degree whose lower coefficients are
  /// the base-q digits of index (c_0 least significant).
  static FqPoly from_index(FieldPtr field, int degree, std::uint64_t index);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FqElement>& coeffs() const { return coeffs_; }
  /// Inverse of from_index.
  std::uint64_t index() const;

  FqElement eval(FqElement x) const;

  /// e.g. "x^2 + 2*x + 1"; elements print as their integer encoding.
  std::string str() const;

  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldPtr field_;
  std::vector<FqElement> coeffs_;
};

/// Default cap on the number of polynomials any enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// All monic irreducibles over a field up to max_degree, sieved.
class IrreducibleTable {
 public:
  const FieldPtr& field() const { return field_; }
  int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  /// Irreducibles of degree j in increasing from_index order.
  const std::vector<FqPoly>& of_degree(int j) const;

  IrreducibleTable(FieldPtr field, std::vector<std::vector<FqPoly>> by_degree)
      : field_(std::move(field)), by_degree_(std::move(by_degree)) {}

 private:
  FieldPtr field_;
  std::vector<std::vector<FqPoly>> by_degree_;  // index 0 unused
};

/// Sieves monic polynomials of each degree 1..max_degree, marking products of
/// lower-degree irreducibles. Throws ResourceError if sum_j q^j > budget.
IrreducibleTable irreducibles(const FieldPtr& field, int max_degree,
                              std::uint64_t budget = kDefaultBudget);

struct FactorizationType {
  Partition type;
  bool squarefree = true;
};

/// Irreducible factor degrees of f with multiplicity, by trial division
/// against the table in (degree, index) order. The table must cover degree
/// floor(deg f / 2). Throws InvalidArgumentError for deg f < 1.
FactorizationType factor_type(const FqPoly& f, const IrreducibleTable& table);
Partition factorization_type(const FqPoly& f, const IrreducibleTable& table);
/// Convenience overload that sieves its own table.
Partition factorization_type(const FqPoly& f);

}  // namespace facstat
