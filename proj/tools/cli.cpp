#include "cli.hpp"

#include <algorithm>
#include <climits>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "facstat/census.hpp"
#include "facstat/error.hpp"
#include "facstat/expect.hpp"
#include "facstat/gf.hpp"
#include "facstat/lie_chars.hpp"
#include "facstat/measures.hpp"
#include "facstat/statistic.hpp"

namespace facstat::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxDegree = 64;

struct Options {
  std::vector<int> degrees;
  int d = 0;
  std::string stat;
  std::string field;
  int order = 9;
  int d_cap = kDefaultDegreeCap;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  bool json = false;
  bool squarefree = false;
  bool list = false;
  bool psi_rows = false;
  std::string norm = "sf-count";
};

/// Thrown for a failed verification; maps to kExitFailure.
class MismatchError : public Error {
 public:
  using Error::Error;
};

Json json_rational(const Rational& r) { return r.str(); }

Json json_integer(const Rational& r) {
  const BigInt v = r.to_integer();
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json coeff_array(const UPoly& p, int length) {
  Json a = Json::array();
  const int n = std::max(length, p.degree() + 1);
  for (int k = 0; k < n; ++k) a.push_back(json_rational(p.coeff(k)));
  return a;
}

Json coeff_array(const std::vector<Rational>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(json_rational(c));
  return a;
}

void check_degree(int d) {
  if (d < 1 || d > kMaxDegree) {
    throw InvalidArgumentError("--d must be between 1 and " + std::to_string(kMaxDegree) + ", got " +
                               std::to_string(d));
  }
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i]) + "  ";
    }
    out << line << '\n';
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// measure ------------------------------------------------------------------

void cmd_measure(const Options& o, std::ostream& out) {
  check_degree(o.d);
  const SplittingMeasure& nu = o.squarefree ? sf_splitting_measure(o.d) : splitting_measure(o.d);
  const auto& set = nu.partitions();
  if (o.json) {
    Json values = Json::object();
    for (std::size_t i = 0; i < set.size(); ++i) values[set[i].str()] = coeff_array(nu.values()[i], o.d);
    emit(out, Json{{"d", o.d}, {"flavor", o.squarefree ? "squarefree" : "all"}, {"values", values}});
    return;
  }
  out << "splitting measure, d = " << o.d << (o.squarefree ? ", squarefree polynomials" : ", all polynomials")
      << " (normalized by q^" << o.d << ")\n";
  std::vector<std::vector<std::string>> rows{{"type", "probability"}};
  for (std::size_t i = 0; i < set.size(); ++i) rows.push_back({set[i].str(), nu.values()[i].pretty()});
  rows.push_back({"total", nu.total().pretty()});
  print_table(out, rows);
}

// psi / phi ----------------------------------------------------------------

void cmd_chars(const Options& o, CharKind kind, std::ostream& out) {
  check_degree(o.d);
  const CharTable& table = kind == CharKind::Psi ? psi_table(o.d) : phi_table(o.d);
  const auto& set = table.row(0).partitions();
  if (o.json) {
    Json j = Json::object();
    for (int k = 0; k < table.d; ++k) {
      Json row = Json::object();
      for (std::size_t i = 0; i < set.size(); ++i) row[set[i].str()] = json_integer(table.row(k)[i]);
      j[std::to_string(k)] = row;
    }
    emit(out, j);
    return;
  }
  out << (kind == CharKind::Psi ? "psi_d^k: characters of H^2k(PConf_d(R^3)), d = "
                                : "phi_d^k: characters of H^k(PConf_d(R^2)), d = ")
      << o.d << '\n';
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"k"};
  for (const auto& lambda : set.partitions()) header.push_back(lambda.str());
  rows.push_back(header);
  for (int k = 0; k < table.d; ++k) {
    std::vector<std::string> row{std::to_string(k)};
    for (std::size_t i = 0; i < set.size(); ++i) row.push_back(table.row(k)[i].str());
    rows.push_back(row);
  }
  print_table(out, rows);
}

// expect / sf-expect --------------------------------------------------------

std::vector<int> degree_list(const Options& o) {
  if (o.degrees.empty()) throw InvalidArgumentError("--d is required");
  for (int d : o.degrees) check_degree(d);
  return o.degrees;
}

void cmd_expect(const Options& o, std::ostream& out) {
  const auto degrees = degree_list(o);
  const Statistic stat = Statistic::parse(o.stat);
  std::vector<ExpectationResult> results;
  for (int d : degrees) results.push_back(expected(stat.at(d), stat.label()));
  if (o.json) {
    Json all = Json::array();
    for (const auto& r : results) {
      all.push_back(Json{{"d", r.d},
                         {"stat", r.statistic},
                         {"coeffs", coeff_array(r.value, r.d)},
                         {"route", route_name(r.route)},
                         {"checks", Json{{"via_measure", "agree"}, {"via_psi", "agree"}}}});
    }
    emit(out, all.size() == 1 ? all[0] : all);
    return;
  }
  std::vector<std::vector<std::string>> rows{{"d", "E_d(" + stat.label() + ")"}};
  for (const auto& r : results) rows.push_back({std::to_string(r.d), r.value.pretty()});
  print_table(out, rows);
}

void cmd_sf_expect(const Options& o, std::ostream& out) {
  const auto degrees = degree_list(o);
  const Statistic stat = Statistic::parse(o.stat);
  SfNormalization norm;
  if (o.norm == "q-power") {
    norm = SfNormalization::QPower;
  } else if (o.norm == "sf-count") {
    norm = SfNormalization::SfCount;
  } else {
    throw InvalidArgumentError("--norm must be q-power or sf-count");
  }
  std::vector<ExpectationResult> results;
  for (int d : degrees) results.push_back(expected_sf(stat.at(d), norm, stat.label(), o.order));
  if (o.json) {
    Json all = Json::array();
    for (const auto& r : results) {
      Json j{{"d", r.d},
             {"stat", r.statistic},
             {"normalization", normalization_name(norm)},
             {"coeffs", coeff_array(r.value, r.d)},
             {"route", route_name(r.route)},
             {"checks", Json{{"via_sf_measure", "agree"}, {"via_phi_signed", "agree"}}}};
      if (!r.series.empty()) j["series"] = coeff_array(r.series);
      all.push_back(j);
    }
    emit(out, all.size() == 1 ? all[0] : all);
    return;
  }
  const std::string title = norm == SfNormalization::QPower ? "(1/q^d) sum over squarefree" : "E^sf_d";
  std::vector<std::vector<std::string>> rows{{"d", title + "(" + stat.label() + ")"}};
  for (const auto& r : results) {
    std::string v = r.value.pretty();
    if (!r.series.empty()) v += "  (as series: " + UPoly(Var::U, r.series).pretty() + " + ...)";
    rows.push_back({std::to_string(r.d), v});
  }
  print_table(out, rows);
}

// decompose -----------------------------------------------------------------

void cmd_decompose(const Options& o, std::ostream& out) {
  check_degree(o.d);
  std::vector<std::pair<std::string, ClassFunction>> targets;
  if (o.psi_rows) {
    const CharTable& psi = psi_table(o.d);
    for (int k = 0; k < psi.d; ++k) targets.emplace_back("psi_" + std::to_string(o.d) + "^" + std::to_string(k), psi.row(k));
  } else {
    if (o.stat.empty()) throw InvalidArgumentError("decompose needs --stat or --psi");
    const Statistic stat = Statistic::parse(o.stat);
    targets.emplace_back(stat.label(), stat.at(o.d));
  }
  const auto set = PartitionSet::of(o.d);
  if (o.json) {
    Json all = Json::array();
    for (const auto& [name, f] : targets) {
      const Decomposition dec = decompose(f);
      Json coeffs = Json::object();
      for (std::size_t i = 0; i < set->size(); ++i) coeffs[(*set)[i].str()] = json_rational(dec.coeffs[i]);
      all.push_back(Json{{"d", o.d}, {"stat", name}, {"coeffs", coeffs}});
    }
    emit(out, all.size() == 1 ? all[0] : all);
    return;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"character"};
  for (const auto& shape : set->partitions()) header.push_back("chi" + shape.str());
  rows.push_back(header);
  for (const auto& [name, f] : targets) {
    const Decomposition dec = decompose(f);
    std::vector<std::string> row{name};
    for (const auto& c : dec.coeffs) row.push_back(c.str());
    rows.push_back(row);
  }
  print_table(out, rows);
}

// limit ---------------------------------------------------------------------

void cmd_limit(const Options& o, std::ostream& out) {
  if (o.order < 0) throw InvalidArgumentError("--order must be >= 0");
  if (o.d_cap < 1 || o.d_cap > kMaxDegree) throw InvalidArgumentError("--d-cap must be between 1 and 64");
  const Statistic stat = Statistic::parse(o.stat);
  if (!stat.polynomial()) {
    throw InvalidArgumentError("statistic '" + stat.label() +
                               "' is not a character polynomial; limit needs one, R, Q or an expression in x1, x2, ...");
  }
  const StableLimit lim = stable_limit(*stat.polynomial(), o.order, o.d_cap);
  if (o.json) {
    emit(out, Json{{"stat", stat.label()},
                   {"polynomial", stat.polynomial()->str()},
                   {"order", o.order},
                   {"coeffs", coeff_array(lim.coeffs)},
                   {"stabilized_at", lim.stabilized_at},
                   {"d_cap", o.d_cap},
                   {"last_degree", lim.last_degree}});
    return;
  }
  out << "lim_{d->oo} E_d(" << stat.label() << ") = " << UPoly(Var::U, lim.coeffs).pretty() << " + O(1/q^"
      << (o.order + 1) << ")\n";
  std::vector<std::vector<std::string>> rows{{"k", "coefficient", "stable from d"}};
  for (std::size_t k = 0; k < lim.coeffs.size(); ++k) {
    rows.push_back({std::to_string(k), lim.coeffs[k].str(), std::to_string(lim.stabilized_at[k])});
  }
  print_table(out, rows);
}

// verify --------------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
  check_degree(o.d);
  if (o.field.empty()) throw InvalidArgumentError("verify needs --q");
  const auto [p, n] = parse_field_order(o.field);
  const FieldPtr field = field_make(p, n);
  const Statistic stat = Statistic::parse(o.stat);
  const ClassFunction f = stat.at(o.d);
  const CensusOptions census_options{o.budget, o.threads};
  const Rational u = Rational(1, field->q());

  struct Check {
    std::string kind;
    Rational census_value;
    Rational formula;
  };
  std::vector<Check> checks;
  if (!o.squarefree) {
    checks.push_back({"all", census(field, o.d, f, false, census_options), expected(f, stat.label()).value.eval(u)});
  }
  checks.push_back({"squarefree", census(field, o.d, f, true, census_options),
                    expected_sf(f, SfNormalization::QPower).value.eval(u)});

  bool ok = true;
  for (const auto& c : checks) ok = ok && c.census_value == c.formula;
  if (o.json) {
    Json arr = Json::array();
    for (const auto& c : checks) {
      arr.push_back(Json{{"kind", c.kind},
                         {"census", json_rational(c.census_value)},
                         {"formula", json_rational(c.formula)},
                         {"match", c.census_value == c.formula}});
    }
    emit(out, Json{{"d", o.d}, {"q", field->q()}, {"p", p}, {"n", n}, {"stat", stat.label()}, {"checks", arr}, {"ok", ok}});
  } else {
    out << "F_" << field->q() << ", d = " << o.d << ", statistic " << stat.label() << '\n';
    std::vector<std::vector<std::string>> rows{{"polynomials", "census", "formula at u = 1/" + std::to_string(field->q()), "result"}};
    for (const auto& c : checks) {
      rows.push_back({c.kind, c.census_value.str(), c.formula.str(), c.census_value == c.formula ? "equal" : "MISMATCH"});
    }
    print_table(out, rows);
  }
  return ok ? kExitOk : kExitFailure;
}

// irreducibles --------------------------------------------------------------

int cmd_irreducibles(const Options& o, std::ostream& out) {
  check_degree(o.d);
  if (o.field.empty()) throw InvalidArgumentError("irreducibles needs --q");
  const auto [p, n] = parse_field_order(o.field);
  const FieldPtr field = field_make(p, n);
  const IrreducibleTable table = irreducibles(field, o.d, o.budget);
  bool ok = true;
  Json degrees = Json::array();
  std::vector<std::vector<std::string>> rows{{"degree", "count", "M_j(q)", "result"}};
  for (int j = 1; j <= o.d; ++j) {
    const auto& polys = table.of_degree(j);
    const Rational expected_count = necklace(j).eval(Rational(field->q()));
    const bool match = expected_count == Rational(static_cast<long>(polys.size()));
    ok = ok && match;
    Json entry{{"degree", j}, {"count", polys.size()}, {"necklace", json_rational(expected_count)}, {"match", match}};
    if (o.list) {
      Json list = Json::array();
      for (const auto& g : polys) {
        Json cs = Json::array();
        for (auto c : g.coeffs()) cs.push_back(c.value);
        list.push_back(cs);
      }
      entry["polys"] = list;
    }
    degrees.push_back(entry);
    rows.push_back({std::to_string(j), std::to_string(polys.size()), expected_count.str(), match ? "equal" : "MISMATCH"});
  }
  if (o.json) {
    emit(out, Json{{"q", field->q()}, {"p", p}, {"n", n}, {"modulus", field->modulus()}, {"degrees", degrees}, {"ok", ok}});
  } else {
    out << "monic irreducibles over F_" << field->q();
    if (n > 1) {
      std::vector<FqElement> m;
      for (int c : field->modulus()) m.push_back({static_cast<std::uint32_t>(c)});
      out << " = F_" << p << "[a]/(" << FqPoly(field_make(p, 1), m).str() << ")";
    }
    out << '\n';
    print_table(out, rows);
    if (o.list) {
      for (int j = 1; j <= o.d; ++j) {
        out << "degree " << j << ":";
        for (const auto& g : table.of_degree(j)) out << "  " << g.str();
        out << '\n';
      }
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

std::pair<int, int> parse_field_order(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgumentError("--q expects p, p^n or a prime power, got '" + text + "'");
    }
    return std::stoi(s);
  };
  const auto caret = text.find('^');
  if (caret != std::string::npos) return {parse_int(text.substr(0, caret)), parse_int(text.substr(caret + 1))};
  const int q = parse_int(text);
  if (q < 2) throw InvalidArgumentError("--q must be at least 2");
  int p = 2;
  while (q % p != 0) ++p;
  int n = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) throw InvalidArgumentError("--q " + text + " is not a prime power");
  return {p, n};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact expected values of factorization statistics over F_q"};
  app.name("facstat");
  app.require_subcommand(1, 1);
  Options o;

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "Emit JSON instead of a text table"); };
  auto add_d = [&](CLI::App* s) { s->add_option("--d", o.d, "Degree d")->required(); };
  auto add_stat = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--stat", o.stat, "Statistic: one|sgn|ET|R|Q, ind:[...], expression in x1,x2,..., @file.json");
    if (required) opt->required();
  };
  auto add_degrees = [&](CLI::App* s) {
    s->add_option("--d", o.degrees, "Degree(s), comma separated")->required()->delimiter(',');
  };

  auto* measure = app.add_subcommand("measure", "Splitting measure nu(lambda) as polynomials in 1/q");
  add_d(measure);
  measure->add_flag("--sf", o.squarefree, "Squarefree splitting measure");
  add_json(measure);

  auto* psi = app.add_subcommand("psi", "Characters of H^2k(PConf_d(R^3))");
  add_d(psi);
  add_json(psi);

  auto* phi = app.add_subcommand("phi", "Characters of H^k(PConf_d(R^2))");
  add_d(phi);
  add_json(phi);

  auto* expect = app.add_subcommand("expect", "Expected value E_d(P) over all monic polynomials");
  add_degrees(expect);
  add_stat(expect, true);
  add_json(expect);

  auto* sf_expect = app.add_subcommand("sf-expect", "Expected value over squarefree polynomials");
  add_degrees(sf_expect);
  add_stat(sf_expect, true);
  sf_expect->add_option("--norm", o.norm, "q-power (divide by q^d) or sf-count (probability)")
      ->check(CLI::IsMember({"q-power", "sf-count"}));
  sf_expect->add_option("--order", o.order, "Series order if the sf-count division is inexact");
  add_json(sf_expect);

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose into irreducible S_d characters");
  add_d(decompose_cmd);
  add_stat(decompose_cmd, false);
  decompose_cmd->add_flag("--psi", o.psi_rows, "Decompose every psi_d^k instead of a statistic");
  add_json(decompose_cmd);

  auto* limit = app.add_subcommand("limit", "Coefficientwise d -> infinity limit of E_d(P)");
  add_stat(limit, true);
  limit->add_option("--order", o.order, "Highest power of 1/q");
  limit->add_option("--d-cap", o.d_cap, "Largest degree to try");
  add_json(limit);

  auto* verify = app.add_subcommand("verify", "Compare a brute-force census with the formulas");
  add_d(verify);
  add_stat(verify, true);
  verify->add_option("--q", o.field, "Field order: p, p^n or a prime power")->required();
  verify->add_option("--budget", o.budget, "Maximum number of polynomials to enumerate");
  verify->add_option("--threads", o.threads, "Census worker threads (0 = all cores)");
  verify->add_flag("--squarefree", o.squarefree, "Only check the squarefree census");
  add_json(verify);

  auto* irred = app.add_subcommand("irreducibles", "Sieve monic irreducibles and compare with M_j(q)");
  irred->add_option("--q", o.field, "Field order: p, p^n or a prime power")->required();
  irred->add_option("--d", o.d, "Maximum degree")->required();
  irred->add_option("--budget", o.budget, "Maximum number of polynomials to enumerate");
  irred->add_flag("--list", o.list, "List the polynomials");
  add_json(irred);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*measure) cmd_measure(o, out);
    if (*psi) cmd_chars(o, CharKind::Psi, out);
    if (*phi) cmd_chars(o, CharKind::Phi, out);
    if (*expect) cmd_expect(o, out);
    if (*sf_expect) cmd_sf_expect(o, out);
    if (*decompose_cmd) cmd_decompose(o, out);
    if (*limit) cmd_limit(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*irred) return cmd_irreducibles(o, out);
  } catch (const ConsistencyError& e) {
    err << "facstat: internal consistency failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ResourceError& e) {
    err << "facstat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotStabilizedError& e) {
    err << "facstat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "facstat: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace facstat::cli
