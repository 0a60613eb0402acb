#include "facstat/character_polynomial.hpp"

#include <cctype>

#include "facstat/error.hpp"

namespace facstat {

CharacterPolynomial CharacterPolynomial::constant(const Rational& c) {
  CharacterPolynomial p;
  if (!c.is_zero()) p.terms_[{}] = c;
  return p;
}

CharacterPolynomial CharacterPolynomial::variable(int j) {
  if (j < 1) throw InvalidArgumentError("character polynomial variables start at x1");
  CharacterPolynomial p;
  p.terms_[{{j, 1}}] = Rational(1);
  return p;
}

CharacterPolynomial CharacterPolynomial::binomial(int j, int b) {
  if (b < 0) throw InvalidArgumentError("binomial needs a nonnegative lower index");
  CharacterPolynomial p = constant(1);
  for (int i = 0; i < b; ++i) p *= variable(j) - constant(i);
  p *= Rational(BigInt(1), factorial(static_cast<unsigned>(b)));
  return p;
}

std::vector<CharacterPolynomial::Term> CharacterPolynomial::terms() const {
  std::vector<Term> out;
  for (const auto& [mono, c] : terms_) out.push_back({c, mono});
  return out;
}

int CharacterPolynomial::max_variable() const {
  int m = 0;
  for (const auto& [mono, c] : terms_) {
    if (!mono.empty()) m = std::max(m, mono.rbegin()->first);
  }
  return m;
}

Rational CharacterPolynomial::eval(const Partition& lambda) const {
  Rational acc(0);
  for (const auto& [mono, c] : terms_) {
    Rational t = c;
    for (const auto& [j, e] : mono) t *= pow(Rational(lambda.multiplicity(j)), e);
    acc += t;
  }
  return acc;
}

void CharacterPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

CharacterPolynomial& CharacterPolynomial::operator+=(const CharacterPolynomial& o) {
  for (const auto& [mono, c] : o.terms_) terms_[mono] += c;
  prune();
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator-=(const CharacterPolynomial& o) {
  for (const auto& [mono, c] : o.terms_) terms_[mono] -= c;
  prune();
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator*=(const CharacterPolynomial& o) {
  std::map<std::map<int, int>, Rational> out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      auto mono = ma;
      for (const auto& [j, e] : mb) mono[j] += e;
      out[mono] += ca * cb;
    }
  }
  terms_ = std::move(out);
  prune();
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator*=(const Rational& c) {
  for (auto& [mono, v] : terms_) v *= c;
  prune();
  return *this;
}

std::string CharacterPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Higher total degree first, then the map order.
  std::vector<const std::pair<const std::map<int, int>, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto total = [](const std::map<int, int>& m) {
    int s = 0;
    for (const auto& [j, e] : m) s += e;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) { return total(a->first) > total(b->first); });
  bool first = true;
  for (const auto* t : order) {
    const Rational& c = t->second;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (const auto& [j, e] : t->first) {
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CharacterPolynomial run() {
    auto p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgumentError("cannot parse character polynomial '" + std::string(text_) + "': " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  static bool constant_value(const CharacterPolynomial& p, Rational& out) {
    const auto ts = p.terms();
    if (ts.empty()) {
      out = Rational(0);
      return true;
    }
    if (ts.size() == 1 && ts[0].exponents.empty()) {
      out = ts[0].coeff;
      return true;
    }
    return false;
  }

  CharacterPolynomial expr() {
    CharacterPolynomial acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  CharacterPolynomial term() {
    CharacterPolynomial acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        Rational c;
        if (!constant_value(unary(), c)) fail("can only divide by a constant");
        if (c.is_zero()) fail("division by zero");
        acc *= Rational(1) / c;
      } else {
        return acc;
      }
    }
  }

  CharacterPolynomial unary() {
    if (eat('-')) return unary() * Rational(-1);
    if (eat('+')) return unary();
    return power();
  }

  CharacterPolynomial power() {
    CharacterPolynomial base = primary();
    if (eat('^')) {
      const long e = integer();
      if (e > 64) fail("exponent too large");
      CharacterPolynomial r = CharacterPolynomial::constant(1);
      for (long i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  int variable_index() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected a variable x1, x2, ...");
    ++pos_;
    const long j = integer();
    if (j < 1) fail("variables start at x1");
    return static_cast<int>(j);
  }

  CharacterPolynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (eat('(')) {
      auto inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return CharacterPolynomial::constant(Rational(integer()));
    if (c == 'x') return CharacterPolynomial::variable(variable_index());
    for (std::string_view fn : {"binom", "C"}) {
      if (text_.substr(pos_, fn.size()) == fn) {
        pos_ += fn.size();
        if (!eat('(')) fail("expected '(' after " + std::string(fn));
        const int j = variable_index();
        if (!eat(',')) fail("expected ',' in " + std::string(fn) + "(xj, b)");
        const long b = integer();
        if (!eat(')')) fail("missing ')'");
        return CharacterPolynomial::binomial(j, static_cast<int>(b));
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CharacterPolynomial CharacterPolynomial::parse(std::string_view text) { return Parser(text).run(); }

ClassFunction cp_eval(const CharacterPolynomial& p, int d) {
  if (d < 1) throw InvalidArgumentError("cp_eval needs d >= 1");
  return ClassFunction::from(d, [&](const Partition& lambda) { return p.eval(lambda); });
}

}  // namespace facstat
