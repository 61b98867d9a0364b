/*
  Shifted difference semigroups attached to a face, and exact membership.

  M_Q is e + the semigroup generated by {g - q} for g a minimal generator
  and q a Gamma point on the face, together with the unit vectors.  The
  within-face differences form a lattice D_Q on which the face functional
  vanishes; membership of p reduces to: can p - e reach, by subtracting
  generator differences with positive value under the face's supporting
  functional psi, a point whose D_Q-coset meets the nonnegative orthant?
  Since every subtraction strictly decreases psi and psi is bounded below,
  the search is a finite DAG; "unknown" arises only when a coordinate budget
  truncates it, and growing the budget never flips yes to no or back.
*/
#ifndef BSROOTS_SEMIGROUP_HPP
#define BSROOTS_SEMIGROUP_HPP

#include "bsroots/faces.hpp"
#include "bsroots/lattice.hpp"

#include <map>
#include <vector>

namespace bsr {

struct DifferenceSemigroup {
  Eigen::Index dim = 0;
  ZVec base;                     // e = (1,...,1)
  std::vector<ZVec> generators;  // unit vectors + all differences g - q
  std::vector<ZVec> face_points; // Gamma ∩ Q within the working box, lex-sorted

  // search structure
  IntegerLattice dq;         // lattice of within-face differences
  std::vector<ZVec> steps;   // quotient transitions (psi > 0), reduced, dedup
  ZVec psi;                  // supporting functional of the face
};

DifferenceSemigroup difference_semigroup(const MonomialIdeal& ideal,
                                         const NewtonPolyhedron& P,
                                         const Face& face, long box);

enum class Membership { yes, no, unknown };

// Does the D_Q-coset of v meet the nonnegative orthant?  psi is the face's
// supporting functional: it vanishes on D_Q and is componentwise
// nonnegative, so whenever it is positive at a pivot column it bounds the
// coefficient range exactly; the coordinate budget only backs up the
// remaining unbounded directions.
Membership coset_meets_orthant(const ZVec& v, const IntegerLattice& dq,
                               const ZVec& psi, long budget);

class MemberSearch {
 public:
  MemberSearch(const DifferenceSemigroup& sg, long budget);

  // is p an element of base + N{generators}?
  Membership query(const ZVec& p);

  long budget() const { return budget_; }

 private:
  Membership explore(const ZVec& reduced);

  const DifferenceSemigroup& sg_;
  long budget_;
  std::map<std::vector<long>, Membership> memo_;
};

// one-shot form
Membership member(const DifferenceSemigroup& sg, const ZVec& p, long budget);

// default membership budget
long default_budget(const MonomialIdeal& ideal);

}  // namespace bsr

#endif
