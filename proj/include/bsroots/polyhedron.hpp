/*
  Newton polyhedron of a monomial ideal: the convex hull of the exponent set,
  an unbounded rational polyhedron whose recession cone is the nonnegative
  orthant.

  Facets are found on the homogenized cone over (1, x): the cone is generated
  by (1, g) for the generators g together with the recession rays (0, e_i),
  and every facet normal is the integer kernel of a rank-n generator subset
  that supports the whole cone.  Facet normals of the polyhedron come out
  componentwise nonnegative.
*/
#ifndef BSROOTS_POLYHEDRON_HPP
#define BSROOTS_POLYHEDRON_HPP

#include "bsroots/ideal.hpp"

#include <vector>

namespace bsr {

struct FacetData {
  ZVec normal;       // primitive integer, componentwise >= 0, nonzero
  Integer constant;  // inequality normal . x >= constant, constant >= 0
  bool is_coordinate = false;  // constant == 0

  // normalized functional L = normal / constant, L == 1 on the facet
  QVec functional() const;
};

// least positive integer making all coefficients of m * L integral
Integer facet_m(const FacetData& facet);

struct NewtonPolyhedron {
  MonomialIdeal ideal;
  Eigen::Index dim = 0;
  std::vector<ZVec> vertices;     // lex-sorted
  std::vector<FacetData> facets;  // canonically sorted

  bool satisfies(const ZVec& x) const;  // all facet inequalities, x >= 0
};

NewtonPolyhedron build_polyhedron(const MonomialIdeal& ideal);

}  // namespace bsr

#endif
