#pragma once

#include <vector>

#include "facstat/class_function.hpp"

namespace facstat {

enum class CharKind { Psi, Phi };

/// Characters indexed by cohomological degree k = 0..d-1.
///
/// Psi rows are the characters psi_d^k of H^{2k}(PConf_d(R^3)); Phi rows are
/// phi_d^k of H^k(PConf_d(R^2)). Every value is an integer.
struct CharTable {
  int d = 0;
  CharKind kind = CharKind::Psi;
  std::vector<ClassFunction> rows;

  const ClassFunction& row(int k) const { return rows.at(static_cast<std::size_t>(k)); }
};

/// psi_d^k(lambda) = z_lambda * [u^k] nu(lambda). Cached per d. Throws
/// ConsistencyError if a value is not an integer.
const CharTable& psi_table(int d);

/// phi_d^k(lambda) = (-1)^k z_lambda * [u^k] nu^sf(lambda). Cached per d.
const CharTable& phi_table(int d);

/// sum_k psi_d^k is the regular character: d! at [1^d], 0 elsewhere.
bool regular_check(int d);

}  // namespace facstat
