#include "bsroots/faces.hpp"

#include "bsroots/affine.hpp"
#include "bsroots/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bsr {

namespace {

bool on_facet(const FacetData& f, const ZVec& v) {
  Integer s(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) s += f.normal[i] * v[i];
  return s == f.constant;
}

bool ray_in_facet(const FacetData& f, int i) { return f.normal[i] == 0; }

struct FaceShape {
  std::vector<ZVec> vertices;
  std::vector<int> rays;
};

FaceShape shape_of(const NewtonPolyhedron& P, const std::vector<int>& active) {
  FaceShape s;
  for (const ZVec& v : P.vertices) {
    bool ok = true;
    for (int a : active)
      if (!on_facet(P.facets[static_cast<std::size_t>(a)], v)) { ok = false; break; }
    if (ok) s.vertices.push_back(v);
  }
  for (Eigen::Index i = 0; i < P.dim; ++i) {
    bool ok = true;
    for (int a : active)
      if (!ray_in_facet(P.facets[static_cast<std::size_t>(a)], static_cast<int>(i))) {
        ok = false;
        break;
      }
    if (ok) s.rays.push_back(static_cast<int>(i));
  }
  return s;
}

std::vector<int> saturate(const NewtonPolyhedron& P, const FaceShape& s) {
  std::vector<int> sat;
  for (std::size_t j = 0; j < P.facets.size(); ++j) {
    const FacetData& f = P.facets[j];
    bool all = true;
    for (const ZVec& v : s.vertices)
      if (!on_facet(f, v)) { all = false; break; }
    if (all)
      for (int i : s.rays)
        if (!ray_in_facet(f, i)) { all = false; break; }
    if (all) sat.push_back(static_cast<int>(j));
  }
  return sat;
}

Face assemble(const NewtonPolyhedron& P, std::vector<int> active, FaceShape s) {
  Face face;
  face.active = std::move(active);
  std::sort(s.vertices.begin(), s.vertices.end(), lex_less);
  face.vertices = std::move(s.vertices);
  face.rays = std::move(s.rays);
  face.whole = face.active.empty();

  const Eigen::Index n = P.dim;
  std::vector<QVec> dirs;
  for (std::size_t i = 1; i < face.vertices.size(); ++i)
    dirs.push_back(to_rational(ZVec(face.vertices[i] - face.vertices[0])));
  for (int r : face.rays) {
    QVec e = QVec::Zero(n);
    e[r] = 1;
    dirs.push_back(e);
  }
  face.dim = rank(columns(dirs, n));

  face.in_coordinate_hyperplane = false;
  for (Eigen::Index i = 0; i < n && !face.in_coordinate_hyperplane; ++i) {
    bool zero = true;
    for (const ZVec& v : face.vertices)
      if (v[i] != 0) { zero = false; break; }
    if (zero)
      for (int r : face.rays)
        if (r == i) { zero = false; break; }
    face.in_coordinate_hyperplane = zero;
  }

  std::vector<QVec> span_gens;
  for (const ZVec& v : face.vertices) span_gens.push_back(to_rational(v));
  for (int r : face.rays) {
    QVec e = QVec::Zero(n);
    e[r] = 1;
    span_gens.push_back(e);
  }
  face.vspan = linear_span(span_gens);

  face.psi = ZVec::Zero(n);
  face.psi_constant = 0;
  for (int a : face.active) {
    face.psi += P.facets[static_cast<std::size_t>(a)].normal;
    face.psi_constant += P.facets[static_cast<std::size_t>(a)].constant;
  }

  if (!face.whole && !face.in_coordinate_hyperplane)
    face.functional = face_functional(face, n);
  return face;
}

}  // namespace

std::vector<Face> enumerate_faces(const NewtonPolyhedron& P) {
  std::map<std::vector<int>, FaceShape> found;
  FaceShape all = shape_of(P, {});
  std::vector<std::vector<int>> queue;
  found.emplace(std::vector<int>{}, all);
  queue.push_back({});
  while (!queue.empty()) {
    std::vector<int> cur = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < P.facets.size(); ++j) {
      if (std::binary_search(cur.begin(), cur.end(), static_cast<int>(j))) continue;
      std::vector<int> trial = cur;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), static_cast<int>(j)),
                   static_cast<int>(j));
      FaceShape s = shape_of(P, trial);
      if (s.vertices.empty()) continue;  // empty intersection
      std::vector<int> key = saturate(P, s);
      if (found.find(key) == found.end()) {
        found.emplace(key, s);
        queue.push_back(key);
      }
    }
  }
  std::vector<Face> faces;
  for (auto& [key, s] : found)
    faces.push_back(assemble(P, key, std::move(s)));
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.active < b.active;
  });
  return faces;
}

QVec face_functional(const Face& face, Eigen::Index dim,
                     const std::vector<Eigen::Index>& elimination_order) {
  if (face.in_coordinate_hyperplane)
    throw std::invalid_argument(
        "face_functional: face lies in a coordinate hyperplane");
  const std::size_t rows = face.vertices.size() + face.rays.size();
  QMat A(static_cast<Eigen::Index>(rows), dim);
  QVec b(static_cast<Eigen::Index>(rows));
  Eigen::Index r = 0;
  for (const ZVec& v : face.vertices) {
    A.row(r) = to_rational(v).transpose();
    b[r] = 1;
    ++r;
  }
  for (int i : face.rays) {
    A.row(r).setZero();
    A(r, i) = 1;
    b[r] = 0;
    ++r;
  }
  auto sol = solve_linear(A, b);
  if (!sol)
    throw std::logic_error("face_functional: inconsistent system (face detection bug)");
  QVec L = sol->particular;
  std::vector<QVec> K = sol->kernel;
  for (Eigen::Index coord : elimination_order) {
    // zero this coefficient if the remaining freedom allows it
    Eigen::Index pick = -1;
    for (std::size_t k = 0; k < K.size(); ++k)
      if (K[k][coord] != 0) { pick = static_cast<Eigen::Index>(k); break; }
    if (pick < 0) continue;
    QVec kv = K[static_cast<std::size_t>(pick)];
    L -= (L[coord] / kv[coord]) * kv;
    std::vector<QVec> K2;
    for (std::size_t k = 0; k < K.size(); ++k) {
      if (static_cast<Eigen::Index>(k) == pick) continue;
      QVec w = K[k] - (K[k][coord] / kv[coord]) * kv;
      bool zero = true;
      for (Eigen::Index i = 0; i < w.size(); ++i)
        if (w[i] != 0) { zero = false; break; }
      if (!zero) K2.push_back(w);
    }
    K = std::move(K2);
  }
  return L;
}

QVec face_functional(const Face& face, Eigen::Index dim) {
  std::vector<Eigen::Index> order;
  for (Eigen::Index i = dim - 1; i >= 0; --i) order.push_back(i);
  return face_functional(face, dim, order);
}

std::vector<ZVec> face_gamma_points(const MonomialIdeal& ideal,
                                    const NewtonPolyhedron& P, const Face& face,
                                    long box) {
  const Eigen::Index n = P.dim;
  std::vector<ZVec> out;
  std::vector<long> u(static_cast<std::size_t>(n), 0);
  while (true) {
    ZVec z(n);
    for (Eigen::Index i = 0; i < n; ++i) z[i] = u[static_cast<std::size_t>(i)];
    if (ideal.gamma_contains(z)) {
      bool on = true;
      for (int a : face.active) {
        const FacetData& f = P.facets[static_cast<std::size_t>(a)];
        Integer s(0);
        for (Eigen::Index i = 0; i < n; ++i) s += f.normal[i] * z[i];
        if (s != f.constant) { on = false; break; }
      }
      if (on) out.push_back(z);
    }
    Eigen::Index k = 0;
    while (k < n) {
      if (++u[static_cast<std::size_t>(k)] <= box) break;
      u[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

long default_face_box(const MonomialIdeal& ideal) {
  long maxc = ideal.max_coordinate().get_si();
  return maxc + static_cast<long>(ideal.dim) *
                    static_cast<long>(ideal.generators.size());
}

}  // namespace bsr
