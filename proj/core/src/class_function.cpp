#include "facstat/class_function.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "facstat/error.hpp"

namespace facstat {

ClassFunction::ClassFunction(int d) : set_(PartitionSet::of(d)), values_(set_->size()) {}

ClassFunction::ClassFunction(int d, std::vector<Rational> values)
    : set_(PartitionSet::of(d)), values_(std::move(values)) {
  if (values_.size() != set_->size()) {
    throw InvalidArgumentError("class function on partitions of " + std::to_string(d) + " needs " +
                               std::to_string(set_->size()) + " values");
  }
}

ClassFunction ClassFunction::from(int d, const std::function<Rational(const Partition&)>& f) {
  ClassFunction out(d);
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] = f((*out.set_)[i]);
  return out;
}

void ClassFunction::require_same_degree(const ClassFunction& o) const {
  if (degree() != o.degree()) {
    throw InvalidArgumentError("class functions of degrees " + std::to_string(degree()) + " and " +
                               std::to_string(o.degree()) + " cannot be combined");
  }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_degree(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_degree(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.require_same_degree(b);
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] *= b.values_[i];
  return out;
}

Rational inner(const ClassFunction& p, const ClassFunction& x) {
  if (p.degree() != x.degree()) {
    throw InvalidArgumentError("inner product of class functions of degrees " + std::to_string(p.degree()) +
                               " and " + std::to_string(x.degree()));
  }
  const auto& set = p.partitions();
  Rational acc(0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (p[i].is_zero() || x[i].is_zero()) continue;
    acc += p[i] * x[i] / Rational(set.z(i));
  }
  return acc;
}

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex mn_mutex;
std::map<MnKey, BigInt> mn_cache;

// Shape from a strictly decreasing beta set of length l: lambda_i = beta_i - (l - i).
std::vector<int> shape_from_beta(const std::vector<int>& beta) {
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

// cls_rest holds the remaining cycle lengths, largest first.
BigInt mn_rec(const std::vector<int>& shape, const std::vector<int>& cls_rest) {
  if (cls_rest.empty()) return shape.empty() ? BigInt(1) : BigInt(0);
  MnKey key{shape, cls_rest};
  {
    std::lock_guard lock(mn_mutex);
    if (auto it = mn_cache.find(key); it != mn_cache.end()) return it->second;
  }

  const int r = cls_rest.front();
  const std::vector<int> rest(cls_rest.begin() + 1, cls_rest.end());
  const int l = static_cast<int>(shape.size());
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (l - 1 - i);
  const std::set<int> occupied(beta.begin(), beta.end());

  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - r;
    if (to < 0 || occupied.count(to)) continue;
    // Height of the removed rim hook = beads jumped over.
    int jumped = 0;
    for (int b : beta) {
      if (b > to && b < from) ++jumped;
    }
    std::vector<int> next = beta;
    next[i] = to;
    std::sort(next.begin(), next.end(), std::greater<>());
    const BigInt sub = mn_rec(shape_from_beta(next), rest);
    if (jumped % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }

  std::lock_guard lock(mn_mutex);
  mn_cache.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_character(const Partition& shape, const Partition& cls) {
  if (shape.size() != cls.size()) {
    throw InvalidArgumentError("shape " + shape.str() + " and class " + cls.str() + " have different sizes");
  }
  return mn_rec(shape.parts(), cls.parts());
}

BigInt irr_dim(const Partition& shape) {
  const auto& parts = shape.parts();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      int leg = 0;
      for (std::size_t k = i + 1; k < parts.size() && parts[k] > j; ++k) ++leg;
      hooks *= (parts[i] - j - 1) + leg + 1;
    }
  }
  return factorial(static_cast<unsigned>(shape.size())) / hooks;
}

ClassFunction irreducible_character(const Partition& shape) {
  return ClassFunction::from(shape.size(), [&](const Partition& cls) { return Rational(mn_character(shape, cls)); });
}

const Rational& Decomposition::of(const Partition& shape) const {
  return coeffs.at(PartitionSet::of(d)->index_of(shape));
}

Decomposition decompose(const ClassFunction& x) {
  Decomposition out{x.degree(), {}};
  for (const auto& shape : x.partitions().partitions()) out.coeffs.push_back(inner(x, irreducible_character(shape)));
  return out;
}

ClassFunction reconstruct(const Decomposition& a) {
  const auto set = PartitionSet::of(a.d);
  if (a.coeffs.size() != set->size()) throw InvalidArgumentError("decomposition has the wrong number of shapes");
  ClassFunction out(a.d);
  for (std::size_t i = 0; i < set->size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    out += irreducible_character((*set)[i]) * a.coeffs[i];
  }
  return out;
}

ClassFunction builtin(Builtin which, int d) {
  switch (which) {
    case Builtin::One:
      return ClassFunction::from(d, [](const Partition&) { return Rational(1); });
    case Builtin::Sgn:
      return ClassFunction::from(d, [](const Partition& l) { return Rational(l.sign()); });
    case Builtin::EvenType:
      return ClassFunction::from(d, [](const Partition& l) { return Rational(l.sign() == 1 ? 1 : 0); });
    case Builtin::Roots:
      return ClassFunction::from(d, [](const Partition& l) { return Rational(l.multiplicity(1)); });
    case Builtin::QuadraticExcess:
      return ClassFunction::from(d, [](const Partition& l) {
        const long x1 = l.multiplicity(1);
        return Rational(x1 * (x1 - 1) / 2 - l.multiplicity(2));
      });
  }
  throw InvalidArgumentError("unknown builtin statistic");
}

ClassFunction builtin(std::string_view name, int d) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "one" || lower == "1") return builtin(Builtin::One, d);
  if (lower == "sgn") return builtin(Builtin::Sgn, d);
  if (lower == "et") return builtin(Builtin::EvenType, d);
  if (lower == "r") return builtin(Builtin::Roots, d);
  if (lower == "q") return builtin(Builtin::QuadraticExcess, d);
  throw InvalidArgumentError("unknown statistic '" + std::string(name) + "' (builtins: one, sgn, ET, R, Q)");
}

ClassFunction indicator(const Partition& lambda0) {
  return ClassFunction::from(lambda0.size(), [&](const Partition& l) { return Rational(l == lambda0 ? 1 : 0); });
}

}  // namespace facstat
