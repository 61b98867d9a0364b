#include "bsroots/polyhedron.hpp"

#include "bsroots/lattice.hpp"
#include "bsroots/linalg.hpp"

#include <algorithm>

namespace bsr {

QVec FacetData::functional() const {
  if (constant <= 0)
    throw std::invalid_argument("facet functional: coordinate facet has none");
  QVec L(normal.size());
  for (Eigen::Index i = 0; i < normal.size(); ++i) {
    L[i] = Rational(normal[i], constant);
    L[i].canonicalize();
  }
  return L;
}

Integer facet_m(const FacetData& facet) {
  QVec L = facet.functional();
  Integer m(1);
  for (Eigen::Index i = 0; i < L.size(); ++i) m = lcm(m, L[i].get_den());
  return m;
}

bool NewtonPolyhedron::satisfies(const ZVec& x) const {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] < 0) return false;
  for (const FacetData& f : facets) {
    Integer v(0);
    for (Eigen::Index i = 0; i < x.size(); ++i) v += f.normal[i] * x[i];
    if (v < f.constant) return false;
  }
  return true;
}

namespace {

bool facet_less(const FacetData& a, const FacetData& b) {
  if (a.is_coordinate != b.is_coordinate) return a.is_coordinate < b.is_coordinate;
  if (a.constant != b.constant) return a.constant < b.constant;
  return lex_less(a.normal, b.normal);
}

}  // namespace

NewtonPolyhedron build_polyhedron(const MonomialIdeal& ideal) {
  if (!ideal.is_nontrivial_proper())
    throw std::invalid_argument("build_polyhedron: ideal must be nontrivial and proper");
  const Eigen::Index n = ideal.dim;
  const auto& gens = ideal.generators;

  // homogenized cone generators
  std::vector<ZVec> W;
  for (const ZVec& g : gens) {
    ZVec w(n + 1);
    w[0] = 1;
    w.tail(n) = g;
    W.push_back(w);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    ZVec w = ZVec::Zero(n + 1);
    w[1 + i] = 1;
    W.push_back(w);
  }

  std::vector<FacetData> facets;
  auto push_facet = [&](const ZVec& nu) {
    ZVec lambda = nu.tail(n);
    bool zero = true;
    for (Eigen::Index i = 0; i < n; ++i)
      if (lambda[i] != 0) zero = false;
    if (zero) return;  // the recession facet of the cone, not a facet of P
    for (Eigen::Index i = 0; i < n; ++i)
      if (lambda[i] < 0)
        throw std::logic_error("build_polyhedron: facet normal with a negative entry");
    FacetData f;
    f.normal = lambda;
    f.constant = -nu[0];
    if (f.constant < 0)
      throw std::logic_error("build_polyhedron: negative facet constant");
    f.is_coordinate = (f.constant == 0);
    for (const FacetData& g : facets)
      if (g.constant == f.constant && same(g.normal, f.normal)) return;
    facets.push_back(std::move(f));
  };

  // all n-subsets of the cone generators
  const std::size_t total = W.size();
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    QMat M(n, n + 1);
    for (Eigen::Index i = 0; i < n; ++i)
      M.row(i) = to_rational(W[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]).transpose();
    std::vector<QVec> ker = kernel_basis(M);
    if (ker.size() == 1) {
      ZVec nu = primitive_integer(ker.front());
      bool nonneg = true, nonpos = true;
      for (const ZVec& w : W) {
        Integer d(0);
        for (Eigen::Index i = 0; i <= n; ++i) d += nu[i] * w[i];
        if (d > 0) nonpos = false;
        if (d < 0) nonneg = false;
      }
      if (nonneg || nonpos) {
        if (nonpos && !nonneg) nu = -nu;
        push_facet(nu);
      }
    }
    // next combination
    Eigen::Index k = n - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] ==
                         static_cast<Eigen::Index>(total) - n + k)
      --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (Eigen::Index j = k + 1; j < n; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }

  std::sort(facets.begin(), facets.end(), facet_less);

  // vertices: generators whose active facet normals span R^n
  std::vector<ZVec> vertices;
  for (const ZVec& g : gens) {
    std::vector<QVec> active;
    for (const FacetData& f : facets) {
      Integer v(0);
      for (Eigen::Index i = 0; i < n; ++i) v += f.normal[i] * g[i];
      if (v == f.constant) active.push_back(to_rational(f.normal));
    }
    if (rank(columns(active, n)) == n) vertices.push_back(g);
  }
  std::sort(vertices.begin(), vertices.end(), lex_less);

  NewtonPolyhedron P;
  P.ideal = ideal;
  P.dim = n;
  P.vertices = std::move(vertices);
  P.facets = std::move(facets);

  for (const ZVec& g : gens)
    if (!P.satisfies(g))
      throw std::logic_error("build_polyhedron: generator violates a facet");
  return P;
}

}  // namespace bsr
