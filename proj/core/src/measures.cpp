#include "facstat/measures.hpp"

#include <map>
#include <mutex>

#include "facstat/error.hpp"

namespace facstat {

int mobius(int n) {
  if (n < 1) throw InvalidArgumentError("mobius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

UPoly necklace(int d) {
  if (d < 1) throw InvalidArgumentError("necklace needs d >= 1");
  UPoly sum(Var::Q);
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(e);
    if (mu != 0) sum += UPoly::monomial(Var::Q, Rational(mu), d / e);
  }
  return sum * Rational(1, d);
}

UPoly irreducible_probability(int d) { return necklace(d).divided_by_q_power(d); }

SplittingMeasure::SplittingMeasure(int d, MeasureFlavor flavor, std::vector<UPoly> values)
    : d_(d), flavor_(flavor), set_(PartitionSet::of(d)), values_(std::move(values)) {
  if (values_.size() != set_->size()) throw InvalidArgumentError("splitting measure needs one value per partition");
}

UPoly SplittingMeasure::total() const {
  UPoly s(Var::U);
  for (const auto& v : values_) s += v;
  return s;
}

namespace {

// C(M + m - 1, m) (multiset choose) or C(M, m), as polynomials in q.
UPoly poly_binomial(const UPoly& m_poly, int m, MeasureFlavor flavor) {
  UPoly acc = UPoly::constant(Var::Q, 1);
  for (int i = 0; i < m; ++i) {
    const int shift = flavor == MeasureFlavor::All ? i : -i;
    acc *= m_poly + UPoly::constant(Var::Q, shift);
  }
  return acc * Rational(BigInt(1), factorial(static_cast<unsigned>(m)));
}

SplittingMeasure build_measure(int d, MeasureFlavor flavor) {
  if (d < 1) throw InvalidArgumentError("splitting measure needs d >= 1");
  const auto set = PartitionSet::of(d);
  std::vector<UPoly> necklaces(static_cast<std::size_t>(d) + 1);
  for (int j = 1; j <= d; ++j) necklaces[static_cast<std::size_t>(j)] = necklace(j);

  std::map<std::pair<int, int>, UPoly> factors;
  std::vector<UPoly> values;
  values.reserve(set->size());
  for (const auto& lambda : set->partitions()) {
    UPoly prod = UPoly::constant(Var::Q, 1);
    for (const auto& [j, m] : lambda.multiplicities()) {
      auto it = factors.find({j, m});
      if (it == factors.end()) {
        it = factors.emplace(std::pair{j, m}, poly_binomial(necklaces[static_cast<std::size_t>(j)], m, flavor)).first;
      }
      prod *= it->second;
    }
    if (prod.degree() != d) {
      throw ConsistencyError("type count for " + lambda.str() + " has q-degree " + std::to_string(prod.degree()) +
                             ", expected " + std::to_string(d));
    }
    values.push_back(prod.divided_by_q_power(d));
  }
  return SplittingMeasure(d, flavor, std::move(values));
}

const SplittingMeasure& cached(int d, MeasureFlavor flavor) {
  static std::mutex mutex;
  static std::map<std::pair<int, MeasureFlavor>, std::unique_ptr<const SplittingMeasure>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({d, flavor}); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const SplittingMeasure>(build_measure(d, flavor));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::pair{d, flavor}, std::move(built));
  return *it->second;
}

}  // namespace

const SplittingMeasure& splitting_measure(int d) { return cached(d, MeasureFlavor::All); }

const SplittingMeasure& sf_splitting_measure(int d) { return cached(d, MeasureFlavor::Squarefree); }

UPoly sf_density(int d) {
  if (d < 0) throw InvalidArgumentError("sf_density needs d >= 0");
  if (d <= 1) return UPoly::constant(Var::U, 1);
  return UPoly(Var::U, {Rational(1), Rational(-1)});
}

}  // namespace facstat
