/*
  Integer lattices in row-style Hermite normal form.

  The HNF here is the unique canonical one: pivot columns strictly increase
  row by row, pivots are positive, and entries above a pivot are reduced into
  [0, pivot).  It is the representation behind exact lattice membership and
  behind the coset enumeration used by the semigroup machinery.
*/
#ifndef BSROOTS_LATTICE_HPP
#define BSROOTS_LATTICE_HPP

#include "bsroots/numeric.hpp"

#include <vector>

namespace bsr {

struct IntegerLattice {
  Eigen::Index dim = 0;  // ambient dimension
  ZMat basis;            // rows in canonical HNF; 0 rows for the zero lattice

  Eigen::Index lattice_rank() const { return basis.rows(); }
  bool is_zero() const { return basis.rows() == 0; }
};

// canonical Hermite form of the lattice generated by the given row vectors
IntegerLattice hermite_form(const std::vector<ZVec>& vectors, Eigen::Index dim);

// exact membership by back-substitution against the HNF basis
bool lattice_contains(const IntegerLattice& lattice, const ZVec& v);

// basis of {x in Z^n : A x = 0}; the result is saturated by construction
std::vector<ZVec> integer_kernel(const ZMat& A);

// V ∩ Z^n for V the rational column span of `span_basis` (n x d)
IntegerLattice span_lattice(const QMat& span_basis);

// reduces v modulo the lattice: canonical representative with the coordinate
// at each pivot column brought into [0, pivot)
ZVec reduce_mod(const IntegerLattice& lattice, ZVec v);

// clears denominators of a rational vector to a primitive integer vector
ZVec primitive_integer(const QVec& v);

}  // namespace bsr

#endif
