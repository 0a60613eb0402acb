#include "facstat/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "facstat/error.hpp"
#include "gf_detail.hpp"

namespace facstat {

std::uint64_t TypeHistogram::total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

namespace {

struct Divisor {
  std::vector<std::uint32_t> coeffs;
  int degree;
};

// Factors every polynomial whose index lies in [begin, end) and adds its type
// to counts.
void factor_block(const detail::TableArith& arith, const std::vector<Divisor>& divisors, const PartitionSet& set,
                  int d, int q, bool squarefree_only, std::uint64_t begin, std::uint64_t end,
                  std::vector<std::uint64_t>& counts) {
  std::vector<std::uint32_t> rem;
  std::vector<std::uint32_t> scratch;
  std::vector<int> parts;
  std::map<std::vector<int>, std::size_t> local_index;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    detail::monic_from_index(idx, d, q, rem);
    parts.clear();
    bool squarefree = true;
    for (const auto& g : divisors) {
      if (static_cast<int>(rem.size()) - 1 < 2 * g.degree) break;
      int count = 0;
      while (arith.divide_exact(rem, g.coeffs, scratch)) {
        ++count;
        parts.push_back(g.degree);
      }
      if (count > 1) squarefree = false;
    }
    if (rem.size() > 1) parts.push_back(static_cast<int>(rem.size()) - 1);
    if (squarefree_only && !squarefree) continue;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    auto it = local_index.find(parts);
    if (it == local_index.end()) it = local_index.emplace(parts, set.index_of(Partition(parts))).first;
    ++counts[it->second];
  }
}

}  // namespace

TypeHistogram census_histogram(const FieldPtr& field, int d, bool squarefree_only, const CensusOptions& options) {
  if (d < 1) throw InvalidArgumentError("census needs d >= 1");
  const auto q = static_cast<std::uint64_t>(field->q());
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    if (total > options.budget / q) {
      throw ResourceError("census of degree " + std::to_string(d) + " over F_" + std::to_string(q) +
                          " exceeds the enumeration budget of " + std::to_string(options.budget) +
                          " polynomials (raise --budget)");
    }
    total *= q;
  }

  const IrreducibleTable table = irreducibles(field, d / 2, options.budget);
  std::vector<Divisor> divisors;
  for (int a = 1; a <= d / 2; ++a) {
    for (const auto& g : table.of_degree(a)) {
      Divisor div{{}, a};
      for (auto c : g.coeffs()) div.coeffs.push_back(c.value);
      divisors.push_back(std::move(div));
    }
  }

  const auto set = PartitionSet::of(d);
  const detail::TableArith arith(*field);
  // Blocks fix the top free coefficient c_{d-1}.
  const std::uint64_t block = total / q;
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, q));

  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(set->size(), 0));
  std::atomic<std::uint64_t> next_block{0};
  auto worker = [&](unsigned t) {
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= q) return;
      factor_block(arith, divisors, *set, d, field->q(), squarefree_only, b * block, (b + 1) * block, partial[t]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  TypeHistogram out{d, field->q(), squarefree_only, std::vector<std::uint64_t>(set->size(), 0)};
  for (const auto& counts : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) out.counts[i] += counts[i];
  }
  return out;
}

Rational census_average(const TypeHistogram& histogram, const ClassFunction& statistic) {
  if (statistic.degree() != histogram.d) {
    throw InvalidArgumentError("statistic has degree " + std::to_string(statistic.degree()) + ", census has degree " +
                               std::to_string(histogram.d));
  }
  Rational sum(0);
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    if (histogram.counts[i] == 0) continue;
    sum += statistic[i] * Rational(BigInt(static_cast<unsigned long>(histogram.counts[i])));
  }
  BigInt qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(histogram.q), static_cast<unsigned long>(histogram.d));
  return sum / Rational(qd);
}

Rational census(const FieldPtr& field, int d, const ClassFunction& statistic, bool squarefree_only,
                const CensusOptions& options) {
  if (statistic.degree() != d) {
    throw InvalidArgumentError("statistic has degree " + std::to_string(statistic.degree()) + ", census has degree " +
                               std::to_string(d));
  }
  return census_average(census_histogram(field, d, squarefree_only, options), statistic);
}

}  // namespace facstat
