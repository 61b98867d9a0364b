#include "bsroots/product.hpp"

#include "bsroots/affine.hpp"
#include "bsroots/linalg.hpp"

#include <algorithm>

namespace bsr {

ProductPolyhedron product_polyhedron(const NewtonPolyhedron& A,
                                     const NewtonPolyhedron& B) {
  ProductPolyhedron prod;
  prod.dim_a = A.dim;
  prod.dim_b = B.dim;
  const Eigen::Index n = A.dim, m = B.dim;

  NewtonPolyhedron P;
  P.ideal = product_ideal(A.ideal, B.ideal);
  P.dim = n + m;
  for (const ZVec& va : A.vertices)
    for (const ZVec& vb : B.vertices) {
      ZVec v(n + m);
      v.head(n) = va;
      v.tail(m) = vb;
      P.vertices.push_back(v);
    }
  std::sort(P.vertices.begin(), P.vertices.end(), lex_less);
  for (const FacetData& f : A.facets) {
    FacetData g;
    g.normal = ZVec::Zero(n + m);
    g.normal.head(n) = f.normal;
    g.constant = f.constant;
    g.is_coordinate = f.is_coordinate;
    P.facets.push_back(g);
  }
  for (const FacetData& f : B.facets) {
    FacetData g;
    g.normal = ZVec::Zero(n + m);
    g.normal.tail(m) = f.normal;
    g.constant = f.constant;
    g.is_coordinate = f.is_coordinate;
    P.facets.push_back(g);
  }
  prod.n_facets_a = static_cast<int>(A.facets.size());
  prod.poly = std::move(P);
  prod.faces_a = enumerate_faces(A);
  prod.faces_b = enumerate_faces(B);
  return prod;
}

Face ProductPolyhedron::face(std::size_t i, std::size_t j) const {
  const Face& qa = faces_a[i];
  const Face& qb = faces_b[j];
  const Eigen::Index n = dim_a, m = dim_b;
  Face f;
  for (int a : qa.active) f.active.push_back(a);
  for (int b : qb.active) f.active.push_back(b + n_facets_a);
  std::sort(f.active.begin(), f.active.end());

  for (const ZVec& va : qa.vertices)
    for (const ZVec& vb : qb.vertices) {
      ZVec v(n + m);
      v.head(n) = va;
      v.tail(m) = vb;
      f.vertices.push_back(v);
    }
  std::sort(f.vertices.begin(), f.vertices.end(), lex_less);
  f.rays = qa.rays;
  for (int r : qb.rays) f.rays.push_back(r + static_cast<int>(n));
  f.dim = qa.dim + qb.dim;
  f.whole = qa.whole && qb.whole;
  f.in_coordinate_hyperplane =
      qa.in_coordinate_hyperplane || qb.in_coordinate_hyperplane;

  std::vector<QVec> span_gens;
  for (const ZVec& v : f.vertices) span_gens.push_back(to_rational(v));
  for (int r : f.rays) {
    QVec e = QVec::Zero(n + m);
    e[r] = 1;
    span_gens.push_back(e);
  }
  f.vspan = linear_span(span_gens);

  f.psi = ZVec::Zero(n + m);
  f.psi_constant = 0;
  f.psi.head(n) = qa.psi;
  f.psi.tail(m) = qb.psi;
  f.psi_constant = qa.psi_constant + qb.psi_constant;

  if (!f.in_coordinate_hyperplane) {
    if (qa.functional && qb.functional) {
      QVec L(n + m);
      for (Eigen::Index k = 0; k < n; ++k) L[k] = (*qa.functional)[k] / 2;
      for (Eigen::Index k = 0; k < m; ++k) L[n + k] = (*qb.functional)[k] / 2;
      f.functional = L;
    } else if (qa.functional && qb.whole) {
      QVec L = QVec::Zero(n + m);
      L.head(n) = *qa.functional;
      f.functional = L;
    } else if (qb.functional && qa.whole) {
      QVec L = QVec::Zero(n + m);
      L.tail(m) = *qb.functional;
      f.functional = L;
    }
  }
  return f;
}

}  // namespace bsr
