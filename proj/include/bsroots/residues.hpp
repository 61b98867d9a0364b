/*
  Residue values of faces and root sets of monomial ideals.

  For an eligible face Q the residue set is
      R_Q = { -L_Q(u) : u in (M_Q \ M'_Q) ∩ V_Q, 0 < L_Q(u) <= cap }.
  L_Q is constant on cosets of the within-face difference lattice D_Q, so the
  enumeration walks value slices of the lattice V_Q ∩ Z^n modulo D_Q and asks
  the membership search about one representative per coset.  Results are
  reported only once two consecutive working-box enlargements agree; the box
  at which that happened is the stabilization certificate.

  Root sets of products are assembled from the factor faces: the value set of
  a product face Q1 x Q2 is
      [diff(Q1) ∩ mem(Q2)] ∪ [mem(Q1) ∩ diff(Q2)],
  where diff is the face's residue value set and mem the value set of M ∩ V;
  a whole-polyhedron factor contributes no constraint and the pair reduces to
  the other factor's residue set.
*/
#ifndef BSROOTS_RESIDUES_HPP
#define BSROOTS_RESIDUES_HPP

#include "bsroots/product.hpp"
#include "bsroots/semigroup.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace bsr {

struct StabilizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StabilizationCertificate {
  long box = 0;     // smallest box at which two enlargements agreed
  long budget = 0;  // membership budget used there
};

struct FaceValueData {
  bool whole = false;
  std::vector<Rational> diff_values;  // positive; roots are their negatives
  std::vector<Rational> mem_values;
  bool cap_hit = false;  // some diff value equals the cap exactly
  StabilizationCertificate certificate;
};

// both value sets for one face, stabilized; throws StabilizationError
FaceValueData face_values(const MonomialIdeal& ideal, const NewtonPolyhedron& P,
                          const Face& face, const Rational& cap, long box = 0,
                          long budget = 0);

struct ResidueSet {
  std::vector<Rational> values;  // negative rationals, descending
  bool cap_hit = false;
  StabilizationCertificate certificate;
};

ResidueSet residue_set(const MonomialIdeal& ideal, const NewtonPolyhedron& P,
                       const Face& face, const Rational& cap, long box = 0);

struct FaceContribution {
  std::size_t face_index = 0;  // into the enumerate_faces order
  std::vector<Rational> roots;
  StabilizationCertificate certificate;
};

struct RootsResult {
  std::vector<Rational> roots;  // negative, descending (closest to zero first)
  std::vector<FaceContribution> contributions;
  std::vector<std::size_t> failed_faces;  // stabilization failures, if any
  bool cap_hit = false;
  Rational cap;
};

// union of residue sets over all faces not contained in a coordinate
// hyperplane; cap <= 0 means the default (ambient dimension)
RootsResult roots(const MonomialIdeal& ideal, const NewtonPolyhedron& P,
                  const std::vector<Face>& faces, Rational cap = Rational(0),
                  long box = 0, int jobs = 1);

struct ModZClasses {
  std::vector<Integer> facet_ms;        // over eligible facets, sorted
  std::vector<Rational> generators;     // 1/m in [0,1)
  std::vector<Rational> classes;        // union of the cyclic subgroups
};

ModZClasses roots_mod_z(const NewtonPolyhedron& P);

// value set of a product face from its factors' value data
std::vector<Rational> product_face_values(const FaceValueData& a,
                                          const FaceValueData& b);

ResidueSet product_face_residues(const FaceValueData& a, const FaceValueData& b,
                                 const Rational& cap);

struct PairContribution {
  std::size_t face_a = 0, face_b = 0;
  std::vector<Rational> roots;
};

struct CheckTsResult {
  RootsResult wa, wb;
  std::vector<Rational> wab;  // negative, descending
  std::vector<PairContribution> pair_contributions;
  bool inclusion = false;
  std::vector<Rational> extra_roots;  // wab minus (wa ∪ wb)
  ModZClasses classes_a, classes_b, classes_product;
  bool modz_equal = false;
  Rational cap;
};

// Thom-Sebastiani check for the product ideal, computed through the face
// factorization (never by a hull in dimension n+m)
CheckTsResult check_ts(const MonomialIdeal& a, const MonomialIdeal& b,
                       Rational cap = Rational(0), long box = 0, int jobs = 1);

// mod-Z classes of a value list
std::vector<Rational> classes_of(const std::vector<Rational>& values);

}  // namespace bsr

#endif
