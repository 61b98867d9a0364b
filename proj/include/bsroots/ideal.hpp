/*
  Monomial ideals as minimal generator sets of exponent vectors.
*/
#ifndef BSROOTS_IDEAL_HPP
#define BSROOTS_IDEAL_HPP

#include "bsroots/numeric.hpp"

#include <string>
#include <vector>

namespace bsr {

struct MonomialIdeal {
  Eigen::Index dim = 0;
  std::vector<ZVec> generators;  // minimal under divisibility, lex-sorted
  std::vector<std::string> names;  // variable names; may be empty (anonymous)

  bool is_unit() const;     // contains the monomial 1
  bool is_nontrivial_proper() const;
  Integer max_coordinate() const;
  // membership of u in the exponent semigroup: u dominates some generator
  bool gamma_contains(const ZVec& u) const;
};

// removes componentwise-dominated vectors and sorts lexicographically
MonomialIdeal minimalize_generators(std::vector<ZVec> raw,
                                    std::vector<std::string> names = {});

// product ideal in the concatenated ambient space (pairwise sums of
// generators; minimality is preserved)
MonomialIdeal product_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

// Parsing: either a term string like "x^2*y^7, y^3" or a JSON object
// {"vars": n, "generators": [[...],...]}.  Throws std::invalid_argument on
// malformed input (negative exponents, bad identifiers, duplicate names).
MonomialIdeal parse_ideal(const std::string& text);

std::string ideal_to_json(const MonomialIdeal& ideal);

}  // namespace bsr

#endif
