#include "facstat/gf.hpp"

#include <algorithm>

#include "facstat/error.hpp"
#include "gf_detail.hpp"

namespace facstat {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

// Remainder of a by monic b over F_p, coefficients low-to-high.
std::vector<int> rem_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    const int c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(k - db + i)];
      slot = ((slot - c * b[static_cast<std::size_t>(i)]) % p + p) % p;
    }
  }
  a.resize(static_cast<std::size_t>(std::max(db, 0)));
  return a;
}

std::vector<int> digits(std::uint64_t index, int base, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (auto& c : out) {
    c = static_cast<int>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
  return out;
}

std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1 || coeffs.back() != 1) return false;
  for (int k = 1; 2 * k <= n; ++k) {
    const std::uint64_t count = checked_power(static_cast<std::uint64_t>(p), k, ~0ULL >> 1);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      auto g = digits(idx, p, k);
      g.push_back(1);
      const auto r = rem_mod_p(coeffs, g, p);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return true;
}

FqField::FqField(int p, int n, std::vector<int> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < n; ++i) q_ *= p;
  const auto q = static_cast<std::size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  auto encode = [&](const std::vector<int>& c) {
    std::uint32_t v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(*it);
    return v;
  };
  std::vector<std::vector<int>> reps(q);
  for (std::size_t a = 0; a < q; ++a) reps[a] = digits(a, p, n);

  for (std::size_t a = 0; a < q; ++a) {
    std::vector<int> nc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) nc[static_cast<std::size_t>(i)] = (p - reps[a][static_cast<std::size_t>(i)]) % p;
    neg_[a] = encode(nc);
    for (std::size_t b = 0; b < q; ++b) {
      std::vector<int> sum(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        sum[static_cast<std::size_t>(i)] = (reps[a][static_cast<std::size_t>(i)] + reps[b][static_cast<std::size_t>(i)]) % p;
      }
      add_[a * q + b] = encode(sum);
      std::vector<int> prod(static_cast<std::size_t>(2 * n - 1), 0);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          auto& slot = prod[static_cast<std::size_t>(i + j)];
          slot = (slot + reps[a][static_cast<std::size_t>(i)] * reps[b][static_cast<std::size_t>(j)]) % p;
        }
      }
      if (n == 1) {
        mul_[a * q + b] = encode(prod);
      } else {
        mul_[a * q + b] = encode(rem_mod_p(prod, modulus_, p));
      }
    }
  }
  for (std::size_t a = 1; a < q; ++a) {
    for (std::size_t b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<std::uint32_t>(b);
        break;
      }
    }
  }
}

FqElement FqField::element(std::uint32_t index) const {
  if (index >= static_cast<std::uint32_t>(q_)) {
    throw InvalidArgumentError("element index " + std::to_string(index) + " outside F_" + std::to_string(q_));
  }
  return {index};
}

FqElement FqField::inv(FqElement a) const {
  if (a.value == 0) throw InvalidArgumentError("zero has no inverse");
  return {inv_[a.value]};
}

FqElement FqField::pow(FqElement a, std::uint64_t e) const {
  FqElement r = one();
  while (e > 0) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return r;
}

FieldPtr field_make(int p, int n) {
  if (!is_prime(p)) throw InvalidArgumentError("characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidArgumentError("extension degree must be >= 1");
  if (checked_power(static_cast<std::uint64_t>(p), n, FqField::kMaxOrder) > FqField::kMaxOrder) {
    throw InvalidArgumentError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                               " exceeds the supported maximum " + std::to_string(FqField::kMaxOrder));
  }
  if (n == 1) return std::make_shared<const FqField>(p, 1, std::vector<int>{0, 1});

  const auto count = checked_power(static_cast<std::uint64_t>(p), n, ~0ULL >> 1);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // c_0 is the most significant digit of the scan.
    std::vector<int> c(static_cast<std::size_t>(n) + 1);
    std::uint64_t rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    c[static_cast<std::size_t>(n)] = 1;
    if (is_irreducible_mod_p(c, p)) return std::make_shared<const FqField>(p, n, std::move(c));
  }
  throw ConsistencyError("no irreducible polynomial found for F_" + std::to_string(p) + "^" + std::to_string(n));
}

FqPoly::FqPoly(FieldPtr field, std::vector<FqElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw InvalidArgumentError("FqPoly needs a field");
  if (coeffs_.empty() || coeffs_.back() != field_->one()) {
    throw InvalidArgumentError("FqPoly must be monic");
  }
  for (auto c : coeffs_) {
    if (c.value >= static_cast<std::uint32_t>(field_->q())) throw InvalidArgumentError("coefficient outside the field");
  }
}

FqPoly FqPoly::from_index(FieldPtr field, int degree, std::uint64_t index) {
  std::vector<FqElement> c(static_cast<std::size_t>(degree) + 1);
  const auto q = static_cast<std::uint64_t>(field->q());
  for (int i = 0; i < degree; ++i) {
    c[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  if (index != 0) throw InvalidArgumentError("polynomial index out of range");
  c.back() = field->one();
  return FqPoly(std::move(field), std::move(c));
}

std::uint64_t FqPoly::index() const {
  std::uint64_t v = 0;
  const auto q = static_cast<std::uint64_t>(field_->q());
  for (int i = degree() - 1; i >= 0; --i) v = v * q + coeffs_[static_cast<std::size_t>(i)].value;
  return v;
}

FqElement FqPoly::eval(FqElement x) const {
  FqElement acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
  return acc;
}

std::string FqPoly::str() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto c = coeffs_[static_cast<std::size_t>(k)].value;
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.field_ != b.field_) throw InvalidArgumentError("FqPoly product across fields");
  const auto& f = *a.field_;
  std::vector<FqElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return FqPoly(a.field_, std::move(out));
}

const std::vector<FqPoly>& IrreducibleTable::of_degree(int j) const {
  if (j < 1 || j > max_degree()) {
    throw InvalidArgumentError("irreducible table has no degree " + std::to_string(j));
  }
  return by_degree_[static_cast<std::size_t>(j)];
}

IrreducibleTable irreducibles(const FieldPtr& field, int max_degree, std::uint64_t budget) {
  if (max_degree < 0) throw InvalidArgumentError("max_degree must be >= 0");
  const auto q = static_cast<std::uint64_t>(field->q());
  std::uint64_t total = 0;
  for (int j = 1; j <= max_degree; ++j) {
    total += checked_power(q, j, budget);
    if (total > budget) {
      throw ResourceError("sieving irreducibles up to degree " + std::to_string(max_degree) + " over F_" +
                          std::to_string(q) + " exceeds the enumeration budget of " + std::to_string(budget) +
                          " polynomials (raise --budget)");
    }
  }

  detail::TableArith arith(*field);
  std::vector<std::vector<FqPoly>> by_degree(static_cast<std::size_t>(max_degree) + 1);
  std::vector<std::vector<std::uint32_t>> raw(static_cast<std::size_t>(max_degree) + 1);  // packed low coeffs
  std::vector<std::uint32_t> prod;
  std::vector<std::uint32_t> h;
  for (int j = 1; j <= max_degree; ++j) {
    const auto count = checked_power(q, j, budget);
    std::vector<char> composite(count, 0);
    for (int a = 1; 2 * a <= j; ++a) {
      const auto& gs = raw[static_cast<std::size_t>(a)];
      const std::size_t ng = gs.size() / static_cast<std::size_t>(a + 1);
      const auto hcount = checked_power(q, j - a, budget);
      for (std::size_t gi = 0; gi < ng; ++gi) {
        std::span<const std::uint32_t> g(gs.data() + gi * static_cast<std::size_t>(a + 1), static_cast<std::size_t>(a + 1));
        for (std::uint64_t hi = 0; hi < hcount; ++hi) {
          detail::monic_from_index(hi, j - a, field->q(), h);
          arith.multiply(g, h, prod);
          composite[detail::index_of_monic(prod, field->q())] = 1;
        }
      }
    }
    auto& out = by_degree[static_cast<std::size_t>(j)];
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (composite[idx]) continue;
      out.push_back(FqPoly::from_index(field, j, idx));
      detail::monic_from_index(idx, j, field->q(), h);
      raw[static_cast<std::size_t>(j)].insert(raw[static_cast<std::size_t>(j)].end(), h.begin(), h.end());
    }
  }
  return IrreducibleTable(field, std::move(by_degree));
}

FactorizationType factor_type(const FqPoly& f, const IrreducibleTable& table) {
  if (f.degree() < 1) throw InvalidArgumentError("factorization type needs degree >= 1");
  if (f.field() != table.field()) throw InvalidArgumentError("irreducible table is over a different field");
  if (table.max_degree() < f.degree() / 2) {
    throw InvalidArgumentError("irreducible table only reaches degree " + std::to_string(table.max_degree()));
  }
  detail::TableArith arith(*f.field());
  std::vector<std::uint32_t> rem(f.coeffs().size());
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = f.coeffs()[i].value;
  std::vector<std::vector<std::uint32_t>> divisors;
  for (int a = 1; 2 * a <= f.degree(); ++a) {
    for (const auto& g : table.of_degree(a)) {
      std::vector<std::uint32_t> raw(g.coeffs().size());
      for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = g.coeffs()[i].value;
      divisors.push_back(std::move(raw));
    }
  }
  std::vector<int> parts;
  bool squarefree = true;
  std::vector<std::uint32_t> scratch;
  for (const auto& g : divisors) {
    const int a = static_cast<int>(g.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < 2 * a) break;
    int count = 0;
    while (arith.divide_exact(rem, g, scratch)) {
      ++count;
      parts.push_back(a);
    }
    if (count > 1) squarefree = false;
  }
  if (rem.size() > 1) parts.push_back(static_cast<int>(rem.size()) - 1);
  return {Partition(std::move(parts)), squarefree};
}

Partition factorization_type(const FqPoly& f, const IrreducibleTable& table) { return factor_type(f, table).type; }

Partition factorization_type(const FqPoly& f) {
  return factorization_type(f, irreducibles(f.field(), f.degree() / 2));
}

}  // namespace facstat
