#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "facstat/character_polynomial.hpp"
#include "facstat/class_function.hpp"

namespace facstat {

/// A factorization statistic as named on the command line.
///
/// Accepted forms: a builtin name (one, sgn, ET, R, Q), "ind:[3,1,1]", a
/// character-polynomial expression in x1, x2, ..., or "@path.json" holding
/// an explicit table {"[3,1,1]": "1/2", ...} over every partition of one d.
class Statistic {
 public:
  /// Throws InvalidArgumentError for anything unrecognized.
  static Statistic parse(std::string_view spec);

  const std::string& label() const { return label_; }
  /// The statistic on partitions of d. Indicators and tables only exist at
  /// their own degree; other d throw InvalidArgumentError.
  ClassFunction at(int d) const;
  /// Present when the statistic is a character polynomial (one, R, Q,
  /// expressions), i.e. defined uniformly in d.
  const std::optional<CharacterPolynomial>& polynomial() const { return polynomial_; }
  /// Degree of an indicator or explicit table.
  std::optional<int> fixed_degree() const { return fixed_degree_; }

 private:
  std::string label_;
  std::function<ClassFunction(int)> make_;
  std::optional<CharacterPolynomial> polynomial_;
  std::optional<int> fixed_degree_;
};

/// Reads an explicit table {partition: rational} from JSON text.
ClassFunction parse_statistic_table(std::string_view json_text);

}  // namespace facstat
