/*
  Exact scalar types and Eigen bindings.

  Everything downstream computes over arbitrary-precision rationals; there is
  no floating point anywhere on a computation path.  Rational is gmpxx's
  mpq_class (always canonicalized: lowest terms, positive denominator) and
  Integer is mpz_class.  Dense vectors/matrices over these scalars are Eigen
  types, which Eigen supports exactly once NumTraits is specialized.
*/
#ifndef BSROOTS_NUMERIC_HPP
#define BSROOTS_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80
  };
};

}  // namespace Eigen

namespace bsr {

using Rational = mpq_class;
using Integer = mpz_class;

using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

inline ZVec zvec(std::initializer_list<long> xs) {
  ZVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

inline QVec qvec(std::initializer_list<Rational> xs) {
  QVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rational& x : xs) v[i++] = x;
  return v;
}

inline QVec to_rational(const ZVec& v) {
  QVec q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

inline bool same(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline bool same(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// lexicographic order, used wherever a deterministic ordering is needed
inline bool lex_less(const ZVec& a, const ZVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer rational_floor(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline Integer rational_ceil(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// positive generator of the group of integer combinations of the inputs;
// 0 when all inputs are 0
Rational rational_gcd(const std::vector<Rational>& xs);

// parse "p", "-p", "p/q" exactly; rejects anything else
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);

}  // namespace bsr

#endif
