#include "facstat/statistic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "facstat/error.hpp"

namespace facstat {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

ClassFunction parse_statistic_table(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("statistic table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.empty()) {
    throw InvalidArgumentError("statistic table must be a nonempty JSON object {\"[partition]\": value}");
  }
  int d = -1;
  std::vector<std::pair<Partition, Rational>> entries;
  for (const auto& [key, value] : doc.items()) {
    Partition lambda = Partition::parse(key);
    if (d < 0) d = lambda.size();
    if (lambda.size() != d) throw InvalidArgumentError("statistic table mixes partitions of different sizes");
    Rational v;
    if (value.is_string()) {
      v = Rational::parse(value.get<std::string>());
    } else if (value.is_number_integer()) {
      v = Rational(value.get<long>());
    } else {
      throw InvalidArgumentError("statistic table value for " + key + " must be an integer or an \"a/b\" string");
    }
    entries.emplace_back(std::move(lambda), std::move(v));
  }
  const auto set = PartitionSet::of(d);
  std::vector<Rational> values(set->size());
  std::vector<bool> seen(set->size(), false);
  for (auto& [lambda, v] : entries) {
    const auto i = set->index_of(lambda);
    if (seen[i]) throw InvalidArgumentError("statistic table lists " + lambda.str() + " twice");
    seen[i] = true;
    values[i] = std::move(v);
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw InvalidArgumentError("statistic table is missing " + (*set)[i].str());
  }
  return ClassFunction(d, std::move(values));
}

Statistic Statistic::parse(std::string_view spec) {
  Statistic s;
  s.label_ = std::string(spec);
  if (spec.empty()) throw InvalidArgumentError("empty statistic");

  if (spec.front() == '@') {
    const std::string path(spec.substr(1));
    std::ifstream in(path);
    if (!in) throw InvalidArgumentError("cannot open statistic file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ClassFunction table = parse_statistic_table(buf.str());
    s.fixed_degree_ = table.degree();
    s.make_ = [table](int) { return table; };
    return s;
  }

  if (spec.substr(0, 4) == "ind:") {
    const Partition lambda0 = Partition::parse(spec.substr(4));
    if (lambda0.size() < 1) throw InvalidArgumentError("indicator needs a nonempty partition");
    s.fixed_degree_ = lambda0.size();
    s.make_ = [lambda0](int) { return indicator(lambda0); };
    return s;
  }

  const std::string lower = lowercase(spec);
  if (lower == "one" || lower == "sgn" || lower == "et" || lower == "r" || lower == "q") {
    const std::string name = lower;
    s.make_ = [name](int d) { return builtin(name, d); };
    if (lower == "one") s.polynomial_ = CharacterPolynomial::constant(1);
    if (lower == "r") s.polynomial_ = CharacterPolynomial::variable(1);
    if (lower == "q") s.polynomial_ = CharacterPolynomial::binomial(1, 2) - CharacterPolynomial::variable(2);
    return s;
  }

  CharacterPolynomial poly;
  try {
    poly = CharacterPolynomial::parse(spec);
  } catch (const InvalidArgumentError& e) {
    throw InvalidArgumentError("unknown statistic '" + std::string(spec) +
                               "': expected one of one, sgn, ET, R, Q, ind:[...], an expression in x1, x2, ..., "
                               "or @file.json (" + e.what() + ")");
  }
  s.polynomial_ = poly;
  s.make_ = [poly](int d) { return cp_eval(poly, d); };
  return s;
}

ClassFunction Statistic::at(int d) const {
  if (fixed_degree_ && *fixed_degree_ != d) {
    throw InvalidArgumentError("statistic '" + label_ + "' is defined on partitions of " +
                               std::to_string(*fixed_degree_) + ", not " + std::to_string(d));
  }
  if (d < 1) throw InvalidArgumentError("statistics need d >= 1");
  return make_(d);
}

}  // namespace facstat
