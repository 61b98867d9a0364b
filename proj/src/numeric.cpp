#include "bsroots/numeric.hpp"

#include <cctype>

namespace bsr {

Rational rational_gcd(const std::vector<Rational>& xs) {
  Integer den(1);
  for (const Rational& x : xs) den = lcm(den, x.get_den());
  Integer g(0);
  for (const Rational& x : xs) {
    Integer n = x.get_num() * (den / x.get_den());
    g = gcd(g, n);
  }
  if (g == 0) return Rational(0);
  Rational r(g, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("bad rational");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad rational");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("bad rational: " + t);
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace bsr
