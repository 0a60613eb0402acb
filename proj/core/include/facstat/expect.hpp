#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facstat/character_polynomial.hpp"
#include "facstat/class_function.hpp"
#include "facstat/upoly.hpp"

namespace facstat {

enum class Route { ViaMeasure, ViaPsi, ViaPhiSigned };

/// How a squarefree expectation is normalized: by q^d (QPower) or by the
/// number of squarefree polynomials (SfCount, a true probability).
enum class SfNormalization { QPower, SfCount };

struct ExpectationResult {
  int d = 0;
  std::string statistic;
  /// Polynomial in u = 1/q.
  UPoly value{Var::U};
  /// Route whose value is reported; the other route was checked against it.
  Route route = Route::ViaPsi;
  std::optional<SfNormalization> normalization;
  /// Power series of value / sf_density when that division is not exact.
  /// Empty otherwise.
  std::vector<Rational> series;
};

/// sum_lambda P(lambda) nu(lambda).
UPoly expected_via_measure(const ClassFunction& p);
/// sum_k <P, psi_d^k> u^k.
UPoly expected_via_psi(const ClassFunction& p);
/// sum_lambda P(lambda) nu^sf(lambda).
UPoly expected_sf_via_measure(const ClassFunction& p);
/// sum_k (-1)^k <P, phi_d^k> u^k.
UPoly expected_sf_via_phi(const ClassFunction& p);

/// E_d(P) over all monic degree-d polynomials, with d = P.degree(). Both
/// routes are computed; disagreement throws ConsistencyError.
ExpectationResult expected(const ClassFunction& p, std::string_view label = {});

/// Expectation over squarefree polynomials. QPower is cross-checked against
/// the signed phi route. SfCount divides by sf_density(d); if that division
/// were ever inexact, `series` carries the expansion to series_order.
ExpectationResult expected_sf(const ClassFunction& p, SfNormalization normalization,
                              std::string_view label = {}, int series_order = -1);

/// E_d(P) at q = 1; equals P([1^d]).
Rational eval_q1(const ClassFunction& p);

/// Constant term of E_d(P), i.e. lim_{q -> oo} E_d(P) = <P, 1>.
Rational trivial_coeff(const ClassFunction& p);

struct StableLimit {
  /// coeffs[k] = lim_d <P, psi_d^k> for k = 0..order.
  std::vector<Rational> coeffs;
  /// First d of the run of three equal consecutive values for each k.
  std::vector<int> stabilized_at;
  /// Largest d evaluated.
  int last_degree = 0;
};

inline constexpr int kDefaultDegreeCap = 30;

/// Coefficientwise d -> infinity limit of E_d(P). A coefficient counts as
/// stable once it takes the same value for three consecutive d >= k + 1.
/// Throws NotStabilizedError naming the first coefficient still moving at
/// d_cap.
StableLimit stable_limit(const CharacterPolynomial& p, int order, int d_cap = kDefaultDegreeCap);

/// Series of (1/2)(1+u)/(1-u)^2 - (1/2)(1-u)/(1-u^2), the limit of E_d(Q).
std::vector<Rational> q_limit_closed_form(int order);

std::string_view route_name(Route route);
std::string_view normalization_name(SfNormalization normalization);

}  // namespace facstat
