#pragma once

// Allocation-free polynomial kernels over FqField tables, shared by the
// irreducible sieve and the census. Polynomials are monic, low-to-high.

#include <cstdint>
#include <span>
#include <vector>

#include "facstat/gf.hpp"

namespace facstat::detail {

inline void monic_from_index(std::uint64_t index, int degree, int q, std::vector<std::uint32_t>& out) {
  out.resize(static_cast<std::size_t>(degree) + 1);
  const auto uq = static_cast<std::uint64_t>(q);
  for (int i = 0; i < degree; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % uq);
    index /= uq;
  }
  out.back() = 1;
}

inline std::uint64_t index_of_monic(std::span<const std::uint32_t> poly, int q) {
  std::uint64_t v = 0;
  for (std::size_t i = poly.size() - 1; i-- > 0;) v = v * static_cast<std::uint64_t>(q) + poly[i];
  return v;
}

class TableArith {
 public:
  explicit TableArith(const FqField& field)
      : q_(static_cast<std::size_t>(field.q())),
        add_(field.add_table()),
        mul_(field.mul_table()),
        neg_(field.neg_table()) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }

  void multiply(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::vector<std::uint32_t>& out) const {
    out.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    }
  }

  /// If monic g divides rem, replaces rem by the quotient and returns true.
  bool divide_exact(std::vector<std::uint32_t>& rem, std::span<const std::uint32_t> g,
                    std::vector<std::uint32_t>& scratch) const {
    const std::size_t dg = g.size() - 1;
    if (rem.size() - 1 < dg) return false;
    const std::size_t dq = rem.size() - 1 - dg;
    scratch.assign(rem.begin(), rem.end());
    for (std::size_t k = dq + 1; k-- > 0;) {
      const std::uint32_t c = scratch[k + dg];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dg; ++i) scratch[k + i] = sub(scratch[k + i], mul(c, g[i]));
      scratch[k + dg] = c;  // keep the quotient coefficient in place
    }
    for (std::size_t i = 0; i < dg; ++i) {
      if (scratch[i] != 0) return false;
    }
    rem.assign(scratch.begin() + static_cast<std::ptrdiff_t>(dg), scratch.end());
    return true;
  }

 private:
  std::size_t q_;
  std::span<const std::uint32_t> add_;
  std::span<const std::uint32_t> mul_;
  std::span<const std::uint32_t> neg_;
};

}  // namespace facstat::detail
