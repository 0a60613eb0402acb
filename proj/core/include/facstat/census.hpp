#pragma once

#include <cstdint>
#include <vector>

#include "facstat/class_function.hpp"
#include "facstat/gf.hpp"

namespace facstat {

struct CensusOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// Counts of monic degree-d polynomials over a field, by factorization type.
struct TypeHistogram {
  int d = 0;
  int q = 0;
  bool squarefree_only = false;
  /// counts[i] is the number of polynomials of type PartitionSet::of(d)[i].
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
};

/// Enumerates all q^d monic degree-d polynomials and factors each by trial
/// division. Work is split into blocks by the top free coefficient; block
/// results are merged by integer addition, so the histogram does not depend
/// on the thread count. Throws ResourceError when q^d exceeds the budget.
TypeHistogram census_histogram(const FieldPtr& field, int d, bool squarefree_only,
                               const CensusOptions& options = {});

/// (1/q^d) * sum of P(type(f)) over monic degree-d f, restricted to
/// squarefree f when squarefree_only is set.
Rational census(const FieldPtr& field, int d, const ClassFunction& statistic, bool squarefree_only,
                const CensusOptions& options = {});

/// The same average computed from an existing histogram.
Rational census_average(const TypeHistogram& histogram, const ClassFunction& statistic);

}  // namespace facstat
