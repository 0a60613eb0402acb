// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "facstat/census.hpp"
#include "facstat/error.hpp"
#include "facstat/expect.hpp"
#include "facstat/lie_chars.hpp"
#include "facstat/measures.hpp"
#include "oracles.hpp"

using namespace facstat;

namespace {

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << (count_ - failed_) << "/" << count_ << " checks";
    for (const auto& f : failures_) os << "\n    " << f;
    return os.str();
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

UPoly U(std::vector<Rational> c) { return UPoly(Var::U, std::move(c)); }

void golden_table(Check& c) {
  const std::vector<std::pair<int, std::vector<Rational>>> rows{
      {3, {0, 2, 1}},
      {4, {0, 2, 2, 2}},
      {5, {0, 2, 2, 4, 2}},
      {6, {0, 2, 2, 4, 4, 3}},
      {10, {0, 2, 2, 4, 4, 6, 6, 8, 8, 5}},
  };
  for (const auto& [d, coeffs] : rows) {
    const UPoly got = expected(builtin(Builtin::QuadraticExcess, d)).value;
    c.expect(got == U(coeffs), "E_" + std::to_string(d) + "(Q) = " + got.pretty());
  }
}

void sign_localization(Check& c) {
  for (int d = 1; d <= 10; ++d) {
    const ClassFunction sgn = builtin(Builtin::Sgn, d);
    c.expect(expected(sgn).value == UPoly::monomial(Var::U, 1, d / 2), "E_" + std::to_string(d) + "(sgn)");
    for (int k = 0; k < d; ++k) {
      c.expect(inner(sgn, psi_table(d).row(k)) == Rational(k == d / 2 ? 1 : 0),
               "<sgn, psi_" + std::to_string(d) + "^" + std::to_string(k) + ">");
    }
  }
}

void roots(Check& c) {
  for (int d = 1; d <= 10; ++d) {
    const ClassFunction r = builtin(Builtin::Roots, d);
    c.expect(expected(r).value == U(std::vector<Rational>(static_cast<std::size_t>(d), 1)),
             "E_" + std::to_string(d) + "(R)");
    for (int k = 0; k < d; ++k) {
      c.expect(inner(r, psi_table(d).row(k)) == Rational(1), "<R, psi_" + std::to_string(d) + "^" + std::to_string(k) + ">");
    }
  }
}

void even_type(Check& c) {
  for (int d = 2; d <= 10; ++d) {
    const UPoly want = UPoly(Var::U, {Rational(1, 2)}) + UPoly::monomial(Var::U, Rational(1, 2), d / 2);
    c.expect(expected(builtin(Builtin::EvenType, d)).value == want, "E_" + std::to_string(d) + "(ET)");
  }
  for (int d = 2; d <= 8; ++d) {
    const auto r = expected_sf(builtin(Builtin::EvenType, d), SfNormalization::SfCount);
    c.expect(r.value == U({Rational(1, 2)}) && r.series.empty(), "E_" + std::to_string(d) + "^sf(ET) = " + r.value.pretty());
  }
}

void regular_representation(Check& c) {
  for (int d = 1; d <= 10; ++d) {
    c.expect(regular_check(d), "regular_check(" + std::to_string(d) + ")");
    Rational sum = 0;
    for (const auto& row : psi_table(d).rows) sum += row.at(Partition::ones(d));
    c.expect(sum == Rational(factorial(static_cast<unsigned>(d))), "sum_k psi_" + std::to_string(d) + "^k([1^d])");
  }
}

void nonnegative_decomposition(Check& c) {
  for (int d = 1; d <= 8; ++d) {
    const auto shapes = partitions_of(d);
    for (int k = 0; k < d; ++k) {
      const ClassFunction& psi = psi_table(d).row(k);
      Rational weighted = 0;
      const std::string tag = "psi_" + std::to_string(d) + "^" + std::to_string(k);
      for (const auto& shape : shapes) {
        const Rational m = inner(psi, irreducible_character(shape));
        c.expect(m.is_integer() && m.sign() >= 0, tag + " in " + shape.str() + " = " + m.str());
        if (k == 0) c.expect(m == Rational(shape == Partition({d}) ? 1 : 0), tag + " trivial");
        weighted += m * Rational(static_cast<long>(oracle::hook_length_dim(shape.parts())));
      }
      c.expect(weighted == psi.at(Partition::ones(d)), tag + " dimension");
    }
  }
}

void census_vs_formulas(Check& c) {
  for (auto [p, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{5, 1}}) {
    const auto field = field_make(p, n);
    const Rational u(1, field->q());
    for (int d = 1; d <= 5; ++d) {
      std::vector<std::pair<std::string, ClassFunction>> stats;
      for (const char* name : {"one", "sgn", "ET", "R", "Q"}) stats.emplace_back(name, builtin(name, d));
      for (const auto& lambda : partitions_of(d)) stats.emplace_back("ind" + lambda.str(), indicator(lambda));
      const auto all = census_histogram(field, d, false);
      const auto sf = census_histogram(field, d, true);
      for (const auto& [name, p_stat] : stats) {
        const std::string tag = "q=" + std::to_string(field->q()) + " d=" + std::to_string(d) + " " + name;
        c.expect(census_average(all, p_stat) == expected(p_stat).value.eval(u), tag);
        c.expect(census_average(sf, p_stat) == expected_sf(p_stat, SfNormalization::QPower).value.eval(u), tag + " sf");
      }
    }
  }
}

void measure_identities(Check& c) {
  for (int d = 1; d <= 12; ++d) {
    const std::string tag = "d=" + std::to_string(d);
    c.expect(splitting_measure(d).total() == U({1}), tag + " sum nu");
    // Every monic linear is squarefree, so the density is 1 - u only from d = 2.
    c.expect(sf_splitting_measure(d).total() == (d == 1 ? U({1}) : U({1, -1})), tag + " sum nu^sf");
    const auto& nu = splitting_measure(d);
    for (std::size_t i = 0; i < nu.values().size(); ++i) {
      const bool identity = i == nu.partitions().identity_index();
      c.expect(nu.values()[i].eval(Rational(1)) == Rational(identity ? 1 : 0), tag + " nu_1 " + nu.partitions()[i].str());
    }
  }
}

void stable_limits(Check& c) {
  const std::vector<Rational> want{0, 2, 2, 4, 4, 6, 6, 8, 8, 10};
  const auto q = stable_limit(CharacterPolynomial::parse("binom(x1,2) - x2"), 9, 30);
  c.expect(q.coeffs == want, "stable_limit(Q, 9)");
  c.expect(q_limit_closed_form(9) == want, "closed form");
  const auto r = stable_limit(CharacterPolynomial::variable(1), 8, 30);
  c.expect(r.coeffs == std::vector<Rational>(9, Rational(1)), "stable_limit(x1, 8)");
  for (const auto* s : {&q, &r}) {
    for (int at : s->stabilized_at) c.expect(at >= 1 && at <= 30, "stabilized within d_cap");
  }
}

void specializations(Check& c) {
  for (int d = 1; d <= 10; ++d) {
    const std::string tag = "d=" + std::to_string(d);
    c.expect(eval_q1(builtin(Builtin::QuadraticExcess, d)) == Rational(static_cast<long>(d) * (d - 1) / 2), tag + " Q at q=1");
    c.expect(eval_q1(builtin(Builtin::Roots, d)) == Rational(d), tag + " R at q=1");
    c.expect(trivial_coeff(builtin(Builtin::QuadraticExcess, d)) == Rational(0), tag + " Q trivial");
    // ET = (1 + sgn)/2, and sgn is trivial when d = 1.
    if (d >= 2) c.expect(trivial_coeff(builtin(Builtin::EvenType, d)) == Rational(1, 2), tag + " ET trivial");
  }
}

void irreducible_counts(Check& c) {
  for (auto [p, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{5, 1}}) {
    const auto field = field_make(p, n);
    const auto table = irreducibles(field, 6);
    for (int j = 1; j <= 6; ++j) {
      c.expect(Rational(static_cast<long>(table.of_degree(j).size())) == necklace(j).eval(Rational(field->q())),
               "q=" + std::to_string(field->q()) + " j=" + std::to_string(j));
    }
  }
  const UPoly display = UPoly(Var::U, {1, 0, 0, -1, -1, 1}) * Rational(1, 6);
  c.expect(irreducible_probability(6) == display, "M_6(q)/q^6 = " + irreducible_probability(6).pretty());
}

void property_suites(Check& c) {
  auto& gen = oracle::rng();
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  auto random_rational = [&] { return Rational(num(gen), den(gen)); };

  for (int d = 1; d <= 8; ++d) {
    const auto shapes = partitions_of(d);
    for (const auto& a : shapes) {
      for (const auto& b : shapes) {
        c.expect(inner(irreducible_character(a), irreducible_character(b)) == Rational(a == b ? 1 : 0),
                 "orthonormality " + a.str() + " " + b.str());
      }
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 8;
    std::vector<Rational> values(PartitionSet::of(d)->size());
    for (auto& v : values) v = random_rational();
    const ClassFunction x(d, values);
    c.expect(reconstruct(decompose(x)) == x, "round trip d=" + std::to_string(d));
  }
  for (auto [p, n] : {std::pair{3, 1}, std::pair{2, 2}}) {
    const auto field = field_make(p, n);
    const auto base = census_histogram(field, 6, false, {kDefaultBudget, 1});
    for (unsigned threads : {2u, 3u, 5u, 0u}) {
      c.expect(census_histogram(field, 6, false, {kDefaultBudget, threads}).counts == base.counts,
               "census threads=" + std::to_string(threads));
    }
  }
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> a(static_cast<std::size_t>(deg(gen)) + 1), b(static_cast<std::size_t>(deg(gen)) + 1);
    for (auto& v : a) v = random_rational();
    for (auto& v : b) v = random_rational();
    if (b[0].is_zero()) b[0] = 1;
    const UPoly numer(Var::U, a), denom(Var::U, b);
    const int order = 12;
    const auto series = series_expand(numer, denom, order);
    // Truncated product of the series with the denominator gives back the numerator.
    const UPoly product = UPoly(Var::U, series) * denom;
    bool ok = true;
    for (int k = 0; k <= order; ++k) ok = ok && product.coeff(k) == numer.coeff(k);
    c.expect(ok, "series_expand trial " + std::to_string(trial));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"golden table E_d(Q), d in {3,4,5,6,10}", golden_table},
      {"sign localization, d <= 10", sign_localization},
      {"roots E_d(R) and <R, psi_d^k> = 1, d <= 10", roots},
      {"even-type bias and squarefree probability 1/2", even_type},
      {"regular representation, d <= 10", regular_representation},
      {"nonnegative integral decomposition of psi_d^k, d <= 8", nonnegative_decomposition},
      {"brute-force census vs formulas, q in {2,3,4,5}, d <= 5", census_vs_formulas},
      {"measure identities, d <= 12", measure_identities},
      {"stable limits of Q and x1", stable_limits},
      {"q = 1 and q -> infinity specializations, d <= 10", specializations},
      {"irreducible counts and degree-6 probability", irreducible_counts},
      {"property suites", property_suites},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << index << ". " << name << " (" << c.summary() << ")\n";
    if (!c.ok()) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
