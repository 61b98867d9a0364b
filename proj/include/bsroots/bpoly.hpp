/*
  b-polynomials as multisets of negative rational roots with multiplicities,
  normalized monic.  Closed-form constructors plus the product/combination
  operations; expansion to coefficients exists only for display.
*/
#ifndef BSROOTS_BPOLY_HPP
#define BSROOTS_BPOLY_HPP

#include "bsroots/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace bsr {

class BPoly {
 public:
  BPoly() = default;

  static BPoly linear(const Rational& root, long mult = 1);

  // (s + 1/a)(s + 2/a)...(s + a/a)
  static BPoly from_univariate_power(long a);

  // x_1^{a_1} + ... + x_n^{a_n}, every a_i >= 2: Milnor basis is the box
  // prod [0, a_i - 2]; the result is (s+1) * prod over the deduplicated
  // weighted-degree set of (s + |w| + rho)
  static BPoly from_brieskorn(const std::vector<long>& exponents);

  // (s+1)(s+2)...(s+n)
  static BPoly from_determinant(long n);

  // (s+1)^{n-1} * prod_{j=0}^{2l-n-2} (s + (j+n)/l); requires l >= n and a
  // nonempty index range
  static BPoly from_generic_arrangement(long n, long l);

  const std::map<Rational, long>& roots() const { return roots_; }
  long degree() const;
  long multiplicity(const Rational& root) const;
  bool operator==(const BPoly& other) const { return roots_ == other.roots_; }

  // all roots negative rational
  bool all_roots_negative() const;

  friend BPoly tensor(const BPoly& a, const BPoly& b);
  friend BPoly lcm(const BPoly& a, const BPoly& b);
  friend BPoly ideal_union_combine(const BPoly& a, const BPoly& b);
  friend BPoly divide_linear(const BPoly& b, const Rational& root);

  // factored form, factors ordered by increasing additive constant:
  // (s+1/3)(s+1/2)(s+1)^2
  std::string factored() const;
  // monic coefficient list, constant term first (display only)
  std::vector<Rational> coefficients() const;
  // sorted [{"root": "-p/q", "mult": k}] records
  std::string serialize() const;

 private:
  std::map<Rational, long> roots_;  // root -> multiplicity, all mult > 0
};

BPoly tensor(const BPoly& a, const BPoly& b);
BPoly lcm(const BPoly& a, const BPoly& b);
BPoly ideal_union_combine(const BPoly& a, const BPoly& b);
BPoly divide_linear(const BPoly& b, const Rational& root);

// product with the b-polynomial of a principal factor; same multiset union
// as tensor, named for the identity it exercises
BPoly principal_product(const BPoly& ideal_part, const BPoly& principal_part);

// expression evaluator for the CLI: det(n), pow(a), arr(n,l),
// brieskorn(a1,...,an), lcm(e1,e2), union_combine(e1,e2), (s+q) literals,
// '*' for tensor and '/' for exact division by a factor
BPoly parse_bpoly_expression(const std::string& text);

}  // namespace bsr

#endif
