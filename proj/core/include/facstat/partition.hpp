#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "facstat/rational.hpp"

namespace facstat {

/// An integer partition lambda of d, parts weakly decreasing.
///
/// Multiplicities m_j are precomputed; the object is immutable after
/// construction.
class Partition {
 public:
  Partition() = default;
  /// Sorts parts into weakly decreasing order. Throws InvalidArgumentError on
  /// a nonpositive part.
  explicit Partition(std::vector<int> parts);

  /// Parses "[3,1,1]" (whitespace allowed, "[]" is the empty partition).
  static Partition parse(std::string_view text);

  /// [1^d].
  static Partition ones(int d);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  /// m_j, the number of parts equal to j.
  int multiplicity(int j) const;
  /// Pairs (j, m_j) with m_j > 0, increasing in j.
  const std::vector<std::pair<int, int>>& multiplicities() const { return mults_; }

  /// z_lambda = prod_j j^{m_j} m_j!, the centralizer order.
  BigInt z() const;
  /// d! / z_lambda, the size of the conjugacy class of cycle type lambda.
  BigInt class_size() const;
  /// +1 for the cycle type of an even permutation, -1 otherwise.
  int sign() const;

  /// "[3,1,1]".
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::vector<std::pair<int, int>> mults_;
  int size_ = 0;
};

/// x_j(lambda) = m_j. j must be >= 1.
int part_count(const Partition& lambda, int j);

/// All partitions of d in reverse-lexicographic order ([d] first, [1^d] last).
std::vector<Partition> partitions_of(int d);

/// Partitions of d together with an index and the cached z values. Shared,
/// immutable, one instance per d.
class PartitionSet {
 public:
  static std::shared_ptr<const PartitionSet> of(int d);

  int degree() const { return d_; }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Partition>& partitions() const { return parts_; }
  const Partition& operator[](std::size_t i) const { return parts_[i]; }
  /// Throws InvalidArgumentError if lambda is not a partition of d.
  std::size_t index_of(const Partition& lambda) const;
  const BigInt& z(std::size_t i) const { return z_[i]; }
  const BigInt& d_factorial() const { return d_factorial_; }
  /// Index of [1^d].
  std::size_t identity_index() const { return parts_.size() - 1; }

  explicit PartitionSet(int d);

 private:
  int d_;
  std::vector<Partition> parts_;
  std::vector<BigInt> z_;
  std::map<std::vector<int>, std::size_t> index_;
  BigInt d_factorial_;
};

}  // namespace facstat
