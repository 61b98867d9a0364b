/*
  The face lattice of a Newton polyhedron.

  A face is keyed by its saturated active facet set.  Since the polyhedron is
  pointed, every face is conv(vertex subset) + cone(coordinate ray subset),
  so that pair characterizes the face completely.  A face contained in some
  {x_i = 0} is flagged: such faces carry no functional and are skipped by the
  root computation.  For every other face there is a linear L with L == 1 on
  the face, unique on the linear span V_Q; the canonical choice here zeroes
  the highest-index coefficients the solution space allows.
*/
#ifndef BSROOTS_FACES_HPP
#define BSROOTS_FACES_HPP

#include "bsroots/polyhedron.hpp"

#include <optional>
#include <vector>

namespace bsr {

struct Face {
  std::vector<int> active;    // saturated active facet indices, sorted
  std::vector<ZVec> vertices; // lex-sorted
  std::vector<int> rays;      // i such that e_i is a recession direction
  Eigen::Index dim = 0;       // affine dimension
  bool whole = false;
  bool in_coordinate_hyperplane = false;
  std::optional<QVec> functional;  // L_Q; absent for the whole polyhedron
                                   // and for coordinate-hyperplane faces
  QMat vspan;                 // columns: basis of the linear span V_Q
  ZVec psi;                   // sum of active facet normals (supports the face)
  Integer psi_constant = 0;   // sum of active facet constants

  bool eligible() const { return !whole && !in_coordinate_hyperplane; }
};

std::vector<Face> enumerate_faces(const NewtonPolyhedron& P);

// L with L(v) = 1 on the face's vertices and L(e_i) = 0 on its rays,
// canonicalized to minimal support by zeroing coefficients from the given
// variable order (highest index first for the default order).
QVec face_functional(const Face& face, Eigen::Index dim,
                     const std::vector<Eigen::Index>& elimination_order);
QVec face_functional(const Face& face, Eigen::Index dim);

// Gamma_a ∩ Q ∩ [0, box]^n
std::vector<ZVec> face_gamma_points(const MonomialIdeal& ideal,
                                    const NewtonPolyhedron& P, const Face& face,
                                    long box);

// default working box for face point enumeration
long default_face_box(const MonomialIdeal& ideal);

}  // namespace bsr

#endif
