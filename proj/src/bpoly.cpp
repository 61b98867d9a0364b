#include "bsroots/bpoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace bsr {

BPoly BPoly::linear(const Rational& root, long mult) {
  if (mult <= 0) throw std::invalid_argument("linear: multiplicity must be positive");
  BPoly b;
  b.roots_[root] = mult;
  return b;
}

BPoly BPoly::from_univariate_power(long a) {
  if (a < 1) throw std::invalid_argument("from_univariate_power: need a >= 1");
  BPoly b;
  for (long i = 1; i <= a; ++i) {
    Rational r(-i, a);
    r.canonicalize();
    b.roots_[r] += 1;
  }
  return b;
}

BPoly BPoly::from_brieskorn(const std::vector<long>& exponents) {
  if (exponents.empty())
    throw std::invalid_argument("from_brieskorn: need at least one exponent");
  for (long a : exponents)
    if (a < 2) throw std::invalid_argument("from_brieskorn: exponents must be >= 2");
  Rational weight_sum(0);
  for (long a : exponents) {
    Rational w(1, a);
    w.canonicalize();
    weight_sum += w;
  }
  // weighted degrees of the monomial Milnor basis, deduplicated
  std::set<Rational> degrees;
  std::vector<long> alpha(exponents.size(), 0);
  while (true) {
    Rational d(0);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      Rational t(alpha[i], exponents[i]);
      t.canonicalize();
      d += t;
    }
    degrees.insert(d);
    std::size_t i = 0;
    while (i < exponents.size()) {
      if (++alpha[i] <= exponents[i] - 2) break;
      alpha[i] = 0;
      ++i;
    }
    if (i == exponents.size()) break;
  }
  BPoly b;
  b.roots_[Rational(-1)] += 1;
  for (const Rational& rho : degrees) b.roots_[-(weight_sum + rho)] += 1;
  return b;
}

BPoly BPoly::from_determinant(long n) {
  if (n < 1) throw std::invalid_argument("from_determinant: need n >= 1");
  BPoly b;
  for (long i = 1; i <= n; ++i) b.roots_[Rational(-i)] = 1;
  return b;
}

BPoly BPoly::from_generic_arrangement(long n, long l) {
  if (n < 1 || l < n)
    throw std::invalid_argument("from_generic_arrangement: need l >= n >= 1");
  if (2 * l - n - 2 < 0)
    throw std::invalid_argument(
        "from_generic_arrangement: degenerate index range");
  BPoly b;
  if (n > 1) b.roots_[Rational(-1)] += n - 1;
  for (long j = 0; j <= 2 * l - n - 2; ++j) {
    Rational r(-(j + n), l);
    r.canonicalize();
    b.roots_[r] += 1;
  }
  return b;
}

long BPoly::degree() const {
  long d = 0;
  for (const auto& [r, m] : roots_) d += m;
  return d;
}

long BPoly::multiplicity(const Rational& root) const {
  auto it = roots_.find(root);
  return it == roots_.end() ? 0 : it->second;
}

bool BPoly::all_roots_negative() const {
  for (const auto& [r, m] : roots_)
    if (r >= 0) return false;
  return true;
}

BPoly tensor(const BPoly& a, const BPoly& b) {
  BPoly out = a;
  for (const auto& [r, m] : b.roots_) out.roots_[r] += m;
  return out;
}

BPoly lcm(const BPoly& a, const BPoly& b) {
  BPoly out = a;
  for (const auto& [r, m] : b.roots_) {
    long& cur = out.roots_[r];
    cur = std::max(cur, m);
  }
  return out;
}

BPoly ideal_union_combine(const BPoly& a, const BPoly& b) {
  // negatives of roots combine additively; multiplicity of gamma is
  // max over decompositions of n_alpha + m_beta - 1
  BPoly out;
  for (const auto& [ra, ma] : a.roots_) {
    for (const auto& [rb, mb] : b.roots_) {
      Rational gamma = ra + rb;
      long mult = ma + mb - 1;
      long& cur = out.roots_[gamma];
      cur = std::max(cur, mult);
    }
  }
  for (auto it = out.roots_.begin(); it != out.roots_.end();)
    it = it->second <= 0 ? out.roots_.erase(it) : std::next(it);
  return out;
}

BPoly divide_linear(const BPoly& b, const Rational& root) {
  auto it = b.roots_.find(root);
  if (it == b.roots_.end() || it->second < 1)
    throw std::invalid_argument("divide_linear: factor not present, division inexact");
  BPoly out = b;
  auto oit = out.roots_.find(root);
  if (--oit->second == 0) out.roots_.erase(oit);
  return out;
}

BPoly principal_product(const BPoly& ideal_part, const BPoly& principal_part) {
  return tensor(ideal_part, principal_part);
}

std::string BPoly::factored() const {
  if (roots_.empty()) return "1";
  // factor (s + q) with q = -root; order by increasing q
  std::vector<std::pair<Rational, long>> factors;
  for (const auto& [r, m] : roots_) factors.push_back({-r, m});
  std::sort(factors.begin(), factors.end());
  std::ostringstream os;
  for (const auto& [q, m] : factors) {
    os << "(s";
    if (q > 0)
      os << "+" << to_string(q);
    else if (q < 0)
      os << "-" << to_string(Rational(-q));
    os << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

std::vector<Rational> BPoly::coefficients() const {
  std::vector<Rational> coeffs{Rational(1)};
  for (const auto& [r, m] : roots_) {
    for (long k = 0; k < m; ++k) {
      // multiply by (s - r)
      std::vector<Rational> next(coeffs.size() + 1, Rational(0));
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i] += coeffs[i] * (-r);
        next[i + 1] += coeffs[i];
      }
      coeffs = std::move(next);
    }
  }
  return coeffs;  // coeffs[i] multiplies s^i
}

std::string BPoly::serialize() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::vector<std::pair<Rational, long>> factors;
  for (const auto& [r, m] : roots_) factors.push_back({r, m});
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [r, m] : factors) {
    nlohmann::ordered_json rec;
    rec["root"] = to_string(r);
    rec["mult"] = m;
    arr.push_back(rec);
  }
  return arr.dump();
}

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit ExprParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw std::invalid_argument(std::string("bpoly parse: expected '") + c +
                                  "' at position " + std::to_string(pos));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("bpoly parse: expected integer at position " +
                                  std::to_string(pos));
    return std::stol(s.substr(start, pos - start));
  }

  Rational rational() {
    long num = integer();
    if (peek() == '/') {
      ++pos;
      long den = integer();
      if (den == 0) throw std::invalid_argument("bpoly parse: zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  BPoly expr() {
    BPoly acc = term();
    while (true) {
      if (consume('*')) {
        acc = tensor(acc, term());
      } else if (consume('/')) {
        BPoly divisor = term();
        for (const auto& [r, m] : divisor.roots())
          for (long k = 0; k < m; ++k) acc = divide_linear(acc, r);
      } else {
        break;
      }
    }
    return acc;
  }

  BPoly term() {
    skip_ws();
    if (peek() == '(') {
      // either a linear factor (s+q) or a parenthesized expression
      std::size_t save = pos;
      ++pos;
      skip_ws();
      if (pos < s.size() && s[pos] == 's') {
        ++pos;
        skip_ws();
        Rational q(0);
        if (consume('+')) {
          q = rational();
        } else if (consume('-')) {
          q = -rational();
        }
        expect(')');
        return BPoly::linear(-q);
      }
      pos = save;
      expect('(');
      BPoly inner = expr();
      expect(')');
      return inner;
    }
    std::string w = word();
    if (w.empty())
      throw std::invalid_argument("bpoly parse: unexpected input at position " +
                                  std::to_string(pos));
    expect('(');
    if (w == "det") {
      long n = integer();
      expect(')');
      return BPoly::from_determinant(n);
    }
    if (w == "pow") {
      long a = integer();
      expect(')');
      return BPoly::from_univariate_power(a);
    }
    if (w == "arr") {
      long n = integer();
      expect(',');
      long l = integer();
      expect(')');
      return BPoly::from_generic_arrangement(n, l);
    }
    if (w == "brieskorn") {
      std::vector<long> exps;
      exps.push_back(integer());
      while (consume(',')) exps.push_back(integer());
      expect(')');
      return BPoly::from_brieskorn(exps);
    }
    if (w == "lcm") {
      BPoly a = expr();
      expect(',');
      BPoly b = expr();
      expect(')');
      return lcm(a, b);
    }
    if (w == "union_combine") {
      BPoly a = expr();
      expect(',');
      BPoly b = expr();
      expect(')');
      return ideal_union_combine(a, b);
    }
    throw std::invalid_argument("bpoly parse: unknown constructor '" + w + "'");
  }
};

}  // namespace

BPoly parse_bpoly_expression(const std::string& text) {
  ExprParser p(text);
  BPoly b = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("bpoly parse: trailing input at position " +
                                std::to_string(p.pos));
  return b;
}

}  // namespace bsr
