#include "facstat/lie_chars.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "facstat/error.hpp"
#include "facstat/measures.hpp"

namespace facstat {

namespace {

CharTable invert_measure(int d, CharKind kind) {
  const SplittingMeasure& nu = kind == CharKind::Psi ? splitting_measure(d) : sf_splitting_measure(d);
  const auto& set = nu.partitions();
  CharTable table{d, kind, {}};
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (nu.values()[i].degree() > d - 1) {
      throw ConsistencyError("measure of " + set[i].str() + " has u-degree " + std::to_string(nu.values()[i].degree()) +
                             " beyond d - 1");
    }
  }
  for (int k = 0; k < d; ++k) {
    std::vector<Rational> row(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
      Rational v = Rational(set.z(i)) * nu.values()[i].coeff(k);
      if (kind == CharKind::Phi && k % 2 == 1) v = -v;
      if (!v.is_integer()) {
        throw ConsistencyError("character value at k=" + std::to_string(k) + ", " + set[i].str() + " is " + v.str());
      }
      row[i] = std::move(v);
    }
    table.rows.emplace_back(d, std::move(row));
  }
  return table;
}

const CharTable& cached(int d, CharKind kind) {
  if (d < 1) throw InvalidArgumentError("character tables need d >= 1");
  static std::mutex mutex;
  static std::map<std::pair<int, CharKind>, std::unique_ptr<const CharTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({d, kind}); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const CharTable>(invert_measure(d, kind));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::pair{d, kind}, std::move(built));
  return *it->second;
}

}  // namespace

const CharTable& psi_table(int d) { return cached(d, CharKind::Psi); }

const CharTable& phi_table(int d) { return cached(d, CharKind::Phi); }

bool regular_check(int d) {
  const CharTable& psi = psi_table(d);
  ClassFunction sum(d);
  for (const auto& row : psi.rows) sum += row;
  const auto& set = sum.partitions();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Rational expected = i == set.identity_index() ? Rational(set.d_factorial()) : Rational(0);
    if (sum[i] != expected) return false;
  }
  return true;
}

}  // namespace facstat
