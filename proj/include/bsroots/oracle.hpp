/*
  Dense brute-force reference computations used to certify the face residue
  machinery on small instances.  Everything here works by forward fixpoint
  saturation of point sets inside a box, straight from the definitions, and
  shares nothing with the residue path beyond the exact-arithmetic
  primitives.
*/
#ifndef BSROOTS_ORACLE_HPP
#define BSROOTS_ORACLE_HPP

#include "bsroots/faces.hpp"
#include "bsroots/product.hpp"

#include <set>
#include <vector>

namespace bsr {

// all points of base + N{generators} reachable without leaving [-B, B]^n
std::set<std::vector<long>> oracle_semigroup_points(
    const std::vector<ZVec>& generators, const ZVec& base, long B);

struct OracleScale {
  Eigen::Index max_dim = 4;
  long max_exponent = 8;
  bool override_guard = false;
};

// residue value set of a face by dense saturation; values are the negatives
// of the reported roots
std::set<Rational> oracle_residues(const MonomialIdeal& ideal,
                                   const NewtonPolyhedron& P, const Face& face,
                                   long B, const Rational& cap,
                                   const OracleScale& scale = {});

// residue value set of a product face Q1 x Q2, computed densely in the
// joined space with the pencil functional t L1 + (1-t) L2; the multi-t form
// saturates once and evaluates every pencil member on the same point set
std::vector<std::set<Rational>> oracle_product_residues_multi(
    const MonomialIdeal& a, const NewtonPolyhedron& Pa, const Face& qa,
    const MonomialIdeal& b, const NewtonPolyhedron& Pb, const Face& qb, long B,
    const Rational& cap, const std::vector<Rational>& ts,
    const OracleScale& scale = {});

std::set<Rational> oracle_product_residues(const MonomialIdeal& a,
                                           const NewtonPolyhedron& Pa,
                                           const Face& qa,
                                           const MonomialIdeal& b,
                                           const NewtonPolyhedron& Pb,
                                           const Face& qb, long B,
                                           const Rational& cap,
                                           const Rational& t,
                                           const OracleScale& scale = {});

// the emptiness criterion for the two-generator diagonal: is the point
// (s+1, t+1) + Z(a1-a2, b1-b2) outside the shifted copy?
bool oracle_two_generator_region(long a1, long b1, long a2, long b2, long s,
                                 long t);

struct CatalogEntry {
  std::string name;
  MonomialIdeal ideal;
};

// 2-variable verification catalog: all principal ideals and 2-generator
// staircases with exponents <= max2, all 3-generator staircases with
// exponents <= max3
std::vector<CatalogEntry> two_variable_catalog(long max2 = 8, long max3 = 5);

struct VerifyOutcome {
  std::string name;
  bool pass = false;
  std::string detail;  // mismatch description, empty on pass
};

// smart residue path vs dense oracle on every eligible face of the entry
VerifyOutcome verify_entry(const CatalogEntry& entry, long B, const Rational& cap);

}  // namespace bsr

#endif
