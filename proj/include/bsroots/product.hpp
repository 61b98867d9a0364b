/*
  Product of two Newton polyhedra in the joined ambient space.

  The product's facets are exactly the two factors' facets extended by
  zeros, and its faces are exactly the pairwise products of factor faces
  (each polyhedron counting as a face of itself), so everything is assembled
  from the factor face lattices instead of re-running the hull.
*/
#ifndef BSROOTS_PRODUCT_HPP
#define BSROOTS_PRODUCT_HPP

#include "bsroots/faces.hpp"

namespace bsr {

struct ProductPolyhedron {
  NewtonPolyhedron poly;  // in dimension n + m
  Eigen::Index dim_a = 0, dim_b = 0;
  int n_facets_a = 0;  // poly.facets lists A's facets first, then B's
  std::vector<Face> faces_a, faces_b;

  std::size_t face_count() const { return faces_a.size() * faces_b.size(); }
  // the face of the product corresponding to (faces_a[i], faces_b[j])
  Face face(std::size_t i, std::size_t j) const;
};

ProductPolyhedron product_polyhedron(const NewtonPolyhedron& A,
                                     const NewtonPolyhedron& B);

}  // namespace bsr

#endif
