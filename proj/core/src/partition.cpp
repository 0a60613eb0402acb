#include "facstat/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "facstat/error.hpp"

namespace facstat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) {
    if (p <= 0) throw InvalidArgumentError("partition parts must be positive");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  for (auto it = parts_.rbegin(); it != parts_.rend();) {
    const int j = *it;
    int m = 0;
    while (it != parts_.rend() && *it == j) {
      ++m;
      ++it;
    }
    mults_.emplace_back(j, m);
  }
}

Partition Partition::parse(std::string_view text) {
  auto bad = [&] { return InvalidArgumentError("malformed partition '" + std::string(text) + "'"); };
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact.push_back(c);
  }
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') throw bad();
  std::vector<int> parts;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto tok = body.substr(0, comma);
    if (tok.empty() || tok.size() > 6) throw bad();
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw bad();
      v = v * 10 + (c - '0');
    }
    if (v == 0) throw bad();
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw bad();
  }
  return Partition(std::move(parts));
}

Partition Partition::ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

int Partition::multiplicity(int j) const {
  for (const auto& [part, m] : mults_) {
    if (part == j) return m;
  }
  return 0;
}

BigInt Partition::z() const {
  BigInt z = 1;
  for (const auto& [j, m] : mults_) {
    BigInt jm;
    mpz_ui_pow_ui(jm.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m));
    z *= jm * factorial(static_cast<unsigned>(m));
  }
  return z;
}

BigInt Partition::class_size() const { return factorial(static_cast<unsigned>(size_)) / z(); }

int Partition::sign() const {
  int s = 1;
  for (const auto& [j, m] : mults_) {
    if ((j - 1) % 2 == 1 && m % 2 == 1) s = -s;
  }
  return s;
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

int part_count(const Partition& lambda, int j) {
  if (j < 1) throw InvalidArgumentError("part_count needs j >= 1");
  return lambda.multiplicity(j);
}

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw InvalidArgumentError("partitions_of needs d >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first, then recursively the same ordering on the rest.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

PartitionSet::PartitionSet(int d) : d_(d), parts_(partitions_of(d)), d_factorial_(factorial(static_cast<unsigned>(d))) {
  z_.reserve(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    z_.push_back(parts_[i].z());
    index_.emplace(parts_[i].parts(), i);
  }
}

std::shared_ptr<const PartitionSet> PartitionSet::of(int d) {
  if (d < 0) throw InvalidArgumentError("PartitionSet needs d >= 0");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const PartitionSet>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_shared<const PartitionSet>(d);
  return slot;
}

std::size_t PartitionSet::index_of(const Partition& lambda) const {
  const auto it = index_.find(lambda.parts());
  if (it == index_.end()) {
    throw InvalidArgumentError(lambda.str() + " is not a partition of " + std::to_string(d_));
  }
  return it->second;
}

}  // namespace facstat
