#include "facstat/expect.hpp"

#include "facstat/error.hpp"
#include "facstat/lie_chars.hpp"
#include "facstat/measures.hpp"

namespace facstat {

namespace {

UPoly weighted_sum(const ClassFunction& p, const SplittingMeasure& nu) {
  UPoly acc(Var::U);
  for (std::size_t i = 0; i < nu.values().size(); ++i) {
    if (!p[i].is_zero()) acc += nu.values()[i] * p[i];
  }
  return acc;
}

UPoly inner_products(const ClassFunction& p, const CharTable& table, bool alternate) {
  std::vector<Rational> coeffs;
  for (int k = 0; k < table.d; ++k) {
    Rational c = inner(p, table.row(k));
    if (alternate && k % 2 == 1) c = -c;
    coeffs.push_back(std::move(c));
  }
  return UPoly(Var::U, std::move(coeffs));
}

void require_agreement(const UPoly& a, const UPoly& b, int d, std::string_view what) {
  if (a != b) {
    throw ConsistencyError(std::string(what) + " routes disagree at d=" + std::to_string(d) + ": " + a.pretty() +
                           " vs " + b.pretty());
  }
}

}  // namespace

UPoly expected_via_measure(const ClassFunction& p) { return weighted_sum(p, splitting_measure(p.degree())); }

UPoly expected_via_psi(const ClassFunction& p) { return inner_products(p, psi_table(p.degree()), false); }

UPoly expected_sf_via_measure(const ClassFunction& p) { return weighted_sum(p, sf_splitting_measure(p.degree())); }

UPoly expected_sf_via_phi(const ClassFunction& p) { return inner_products(p, phi_table(p.degree()), true); }

ExpectationResult expected(const ClassFunction& p, std::string_view label) {
  const int d = p.degree();
  if (d < 1) throw InvalidArgumentError("expected values need d >= 1");
  UPoly via_measure = expected_via_measure(p);
  UPoly via_psi = expected_via_psi(p);
  require_agreement(via_measure, via_psi, d, "measure and psi");
  if (via_psi.degree() > d - 1) throw ConsistencyError("E_d(P) has u-degree above d - 1");
  return {d, std::string(label), std::move(via_psi), Route::ViaPsi, std::nullopt, {}};
}

ExpectationResult expected_sf(const ClassFunction& p, SfNormalization normalization, std::string_view label,
                              int series_order) {
  const int d = p.degree();
  if (d < 1) throw InvalidArgumentError("expected values need d >= 1");
  UPoly via_measure = expected_sf_via_measure(p);
  UPoly via_phi = expected_sf_via_phi(p);
  require_agreement(via_measure, via_phi, d, "squarefree measure and phi");

  ExpectationResult result{d, std::string(label), std::move(via_phi), Route::ViaPhiSigned, normalization, {}};
  if (normalization == SfNormalization::SfCount) {
    const UPoly density = sf_density(d);
    auto [quotient, remainder] = divmod(result.value, density);
    if (remainder.is_zero()) {
      result.value = std::move(quotient);
    } else {
      result.series = series_expand(result.value, density, series_order < 0 ? d : series_order);
    }
  }
  return result;
}

Rational eval_q1(const ClassFunction& p) { return expected(p).value.eval(Rational(1)); }

Rational trivial_coeff(const ClassFunction& p) { return expected(p).value.coeff(0); }

StableLimit stable_limit(const CharacterPolynomial& p, int order, int d_cap) {
  if (order < 0) throw InvalidArgumentError("stable_limit needs order >= 0");
  constexpr int kRun = 3;
  const auto n = static_cast<std::size_t>(order) + 1;
  std::vector<Rational> last(n);
  std::vector<int> run_start(n, 0);
  std::vector<int> run_length(n, 0);
  std::vector<bool> done(n, false);
  StableLimit out{std::vector<Rational>(n), std::vector<int>(n, 0), 0};

  std::size_t remaining = n;
  for (int d = 1; d <= d_cap && remaining > 0; ++d) {
    const UPoly e = expected(cp_eval(p, d)).value;
    out.last_degree = d;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] || d < static_cast<int>(k) + 1) continue;
      const Rational c = e.coeff(static_cast<int>(k));
      if (run_length[k] > 0 && c == last[k]) {
        ++run_length[k];
      } else {
        last[k] = c;
        run_start[k] = d;
        run_length[k] = 1;
      }
      if (run_length[k] == kRun) {
        done[k] = true;
        out.coeffs[k] = c;
        out.stabilized_at[k] = run_start[k];
        --remaining;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!done[k]) {
      throw NotStabilizedError("coefficient of u^" + std::to_string(k) + " of " + p.str() +
                                   " did not stabilize by d = " + std::to_string(d_cap) + " (raise --d-cap)",
                               static_cast<int>(k));
    }
  }
  return out;
}

std::vector<Rational> q_limit_closed_form(int order) {
  const UPoly one_plus_u(Var::U, {Rational(1, 2), Rational(1, 2)});
  const UPoly one_minus_u(Var::U, {Rational(1), Rational(-1)});
  const UPoly one_minus_u2(Var::U, {Rational(1), Rational(0), Rational(-1)});
  const auto first = series_expand(one_plus_u, one_minus_u * one_minus_u, order);
  const auto second = series_expand(one_minus_u * Rational(1, 2), one_minus_u2, order);
  std::vector<Rational> out(first.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = first[i] - second[i];
  return out;
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::ViaMeasure: return "via_measure";
    case Route::ViaPsi: return "via_psi";
    case Route::ViaPhiSigned: return "via_phi_signed";
  }
  return "unknown";
}

std::string_view normalization_name(SfNormalization normalization) {
  return normalization == SfNormalization::QPower ? "q_power" : "sf_count";
}

}  // namespace facstat
