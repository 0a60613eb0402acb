#pragma once

#include <memory>
#include <vector>

#include "facstat/partition.hpp"
#include "facstat/upoly.hpp"

namespace facstat {

/// Moebius function, n >= 1.
int mobius(int n);

/// M_d(q) = (1/d) sum_{e | d} mu(e) q^{d/e}, the number of monic irreducibles
/// of degree d over F_q, as a polynomial in q.
UPoly necklace(int d);

/// M_d(q) / q^d in u: the probability that a monic degree-d polynomial is
/// irreducible.
UPoly irreducible_probability(int d);

enum class MeasureFlavor { All, Squarefree };

/// Number of monic degree-d polynomials of each factorization type divided by
/// q^d, as polynomials in u = 1/q. The Squarefree flavor counts only
/// squarefree polynomials but keeps the q^d normalization.
class SplittingMeasure {
 public:
  SplittingMeasure(int d, MeasureFlavor flavor, std::vector<UPoly> values);

  int degree() const { return d_; }
  MeasureFlavor flavor() const { return flavor_; }
  const PartitionSet& partitions() const { return *set_; }
  /// values()[i] belongs to partitions()[i].
  const std::vector<UPoly>& values() const { return values_; }
  const UPoly& at(const Partition& lambda) const { return values_[set_->index_of(lambda)]; }
  /// Sum over all types.
  UPoly total() const;

 private:
  int d_;
  MeasureFlavor flavor_;
  std::shared_ptr<const PartitionSet> set_;
  std::vector<UPoly> values_;
};

/// nu(lambda) = q^{-d} prod_j C(M_j(q) + m_j - 1, m_j). Cached per d.
const SplittingMeasure& splitting_measure(int d);

/// nu^sf(lambda) = q^{-d} prod_j C(M_j(q), m_j). Cached per d.
const SplittingMeasure& sf_splitting_measure(int d);

/// #squarefree monic degree-d polynomials / q^d: 1 for d <= 1, 1 - u otherwise.
UPoly sf_density(int d);

}  // namespace facstat
