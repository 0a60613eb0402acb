#include "facstat/upoly.hpp"

#include <algorithm>

#include "facstat/error.hpp"

namespace facstat {

UPoly::UPoly(Var var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
  normalize();
}

UPoly UPoly::constant(Var var, const Rational& c) { return UPoly(var, {c}); }

UPoly UPoly::monomial(Var var, const Rational& c, int k) {
  if (k < 0) throw InvalidArgumentError("negative monomial exponent");
  std::vector<Rational> cs(static_cast<std::size_t>(k) + 1);
  cs.back() = c;
  return UPoly(var, std::move(cs));
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::divided_by_q_power(int total_degree) const {
  if (var_ != Var::Q) throw TagMismatchError("divided_by_q_power expects a polynomial in q");
  if (degree() > total_degree) {
    throw InvalidArgumentError("q-degree " + std::to_string(degree()) +
                               " exceeds the divisor power " + std::to_string(total_degree));
  }
  std::vector<Rational> out(static_cast<std::size_t>(total_degree) + 1);
  for (int i = 0; i <= degree(); ++i) {
    out[static_cast<std::size_t>(total_degree - i)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return UPoly(Var::U, std::move(out));
}

void UPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UPoly::require_same_var(const UPoly& o) const {
  if (var_ != o.var_) throw TagMismatchError("polynomials in q and in u = 1/q cannot be combined");
}

UPoly& UPoly::operator+=(const UPoly& o) {
  require_same_var(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  require_same_var(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  require_same_var(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

std::string UPoly::pretty() const {
  if (is_zero()) return "0";
  const std::string name = "q";
  std::string out;
  bool first = true;
  auto emit = [&](int k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) return;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.str();
      return;
    }
    const std::string power = k == 1 ? name : name + "^" + std::to_string(k);
    if (var_ == Var::U) {
      // c * u^k = numerator / (denominator * q^k)
      out += mag.numerator().get_str() + "/";
      if (mag.denominator() != 1) {
        out += "(" + mag.denominator().get_str() + "*" + power + ")";
      } else {
        out += power;
      }
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += power;
    }
  };
  if (var_ == Var::U) {
    for (int k = 0; k <= degree(); ++k) emit(k);
  } else {
    for (int k = degree(); k >= 0; --k) emit(k);
  }
  return out;
}

UPoly poly_arith(const UPoly& a, const UPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  throw InvalidArgumentError("unknown polynomial operation");
}

std::pair<UPoly, UPoly> divmod(const UPoly& numer, const UPoly& denom) {
  if (numer.var() != denom.var()) throw TagMismatchError("divmod across variables");
  if (denom.is_zero()) throw InvalidArgumentError("polynomial division by zero");
  std::vector<Rational> rem = numer.coeffs();
  const int dd = denom.degree();
  const Rational lead = denom.coeffs().back();
  if (numer.degree() < dd) return {UPoly(numer.var()), numer};
  std::vector<Rational> quot(static_cast<std::size_t>(numer.degree() - dd) + 1);
  for (int k = numer.degree() - dd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= c * denom.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {UPoly(numer.var(), std::move(quot)), UPoly(numer.var(), std::move(rem))};
}

std::vector<Rational> series_expand(const UPoly& numer, const UPoly& denom, int order) {
  if (numer.var() != Var::U || denom.var() != Var::U) {
    throw TagMismatchError("series_expand works in u = 1/q");
  }
  if (order < 0) throw InvalidArgumentError("negative series order");
  const Rational d0 = denom.coeff(0);
  if (d0.is_zero()) throw NonExpandableError("denominator has zero constant term");
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc = numer.coeff(n);
    for (int i = 1; i <= std::min(n, denom.degree()); ++i) {
      acc -= denom.coeff(i) * out[static_cast<std::size_t>(n - i)];
    }
    out[static_cast<std::size_t>(n)] = acc / d0;
  }
  return out;
}

}  // namespace facstat
