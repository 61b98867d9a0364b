#include <doctest.h>

#include "bsroots/faces.hpp"
#include "bsroots/linalg.hpp"
#include "bsroots/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace bsr;

namespace {

MonomialIdeal ideal2(std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<ZVec> vs;
  for (auto g : gens) vs.push_back(zvec(g));
  return minimalize_generators(std::move(vs));
}

const FacetData* find_facet(const NewtonPolyhedron& P,
                            std::initializer_list<long> normal, long constant) {
  ZVec n = zvec(normal);
  for (const FacetData& f : P.facets)
    if (f.constant == constant && same(f.normal, n)) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("minimalize_generators examples") {
  auto i1 = ideal2({{2, 0}, {2, 1}});
  REQUIRE(i1.generators.size() == 1);
  CHECK(same(i1.generators[0], zvec({2, 0})));

  auto i2 = ideal2({{2, 0}, {0, 7}});
  CHECK(i2.generators.size() == 2);

  auto i3 = ideal2({{1, 4}, {2, 0}, {0, 7}, {1, 5}});
  REQUIRE(i3.generators.size() == 3);
  CHECK(same(i3.generators[0], zvec({0, 7})));
  CHECK(same(i3.generators[1], zvec({1, 4})));
  CHECK(same(i3.generators[2], zvec({2, 0})));

  CHECK_THROWS_AS(minimalize_generators({}), std::invalid_argument);
  CHECK_THROWS_AS(minimalize_generators({zvec({-1, 0})}), std::invalid_argument);
}

TEST_CASE("build_polyhedron for (x^a, y^b)") {
  for (long a : {2L, 3L, 5L})
    for (long b : {3L, 7L}) {
      auto P = build_polyhedron(ideal2({{a, 0}, {0, b}}));
      REQUIRE(P.vertices.size() == 2);
      CHECK(same(P.vertices[0], zvec({0, b})));
      CHECK(same(P.vertices[1], zvec({a, 0})));
      // diagonal facet x/a + y/b >= 1, primitive integer normal
      long g = std::gcd(a, b);
      const FacetData* diag = find_facet(P, {b / g, a / g}, a * b / g);
      REQUIRE(diag != nullptr);
      CHECK(!diag->is_coordinate);
      CHECK(facet_m(*diag) == Integer(a * b / g));
      CHECK(find_facet(P, {1, 0}, 0) != nullptr);  // x >= 0
      CHECK(find_facet(P, {0, 1}, 0) != nullptr);  // y >= 0
      CHECK(P.facets.size() == 3);
    }
}

TEST_CASE("build_polyhedron for two interior generators") {
  // a1 < a2, b1 > b2 > 0
  long a1 = 1, b1 = 4, a2 = 3, b2 = 1;
  auto P = build_polyhedron(ideal2({{a1, b1}, {a2, b2}}));
  REQUIRE(P.vertices.size() == 2);
  CHECK(same(P.vertices[0], zvec({a1, b1})));
  CHECK(same(P.vertices[1], zvec({a2, b2})));
  // diagonal normal proportional to (b1-b2, a2-a1)
  const FacetData* diag =
      find_facet(P, {b1 - b2, a2 - a1}, (b1 - b2) * a1 + (a2 - a1) * b1);
  REQUIRE(diag != nullptr);
  CHECK(find_facet(P, {1, 0}, a1) != nullptr);  // vertical x >= a1
  CHECK(find_facet(P, {0, 1}, b2) != nullptr);  // horizontal y >= b2
  CHECK(P.facets.size() == 3);
}

TEST_CASE("build_polyhedron shifted orthant") {
  std::vector<ZVec> gen{zvec({1, 1, 1})};
  auto P = build_polyhedron(minimalize_generators(gen));
  REQUIRE(P.vertices.size() == 1);
  CHECK(same(P.vertices[0], zvec({1, 1, 1})));
  REQUIRE(P.facets.size() == 3);
  for (const FacetData& f : P.facets) {
    CHECK(f.constant == 1);
    Integer sum(0);
    for (Eigen::Index i = 0; i < 3; ++i) sum += f.normal[i];
    CHECK(sum == 1);  // each facet is x_i >= 1
  }
}

TEST_CASE("facet normals are componentwise nonnegative, hull is stable") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> d(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ZVec> gens;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      ZVec g = zvec({d(rng), d(rng)});
      if (g[0] == 0 && g[1] == 0) g[0] = 1;
      gens.push_back(g);
    }
    auto ideal = minimalize_generators(gens);
    auto P = build_polyhedron(ideal);
    for (const FacetData& f : P.facets) {
      for (Eigen::Index i = 0; i < 2; ++i) CHECK(f.normal[i] >= 0);
      CHECK(f.constant >= 0);
    }
    // permute and add dominated generators: same polyhedron
    std::vector<ZVec> noisy = gens;
    for (const ZVec& g : gens) noisy.push_back(g + zvec({1, 2}));
    std::shuffle(noisy.begin(), noisy.end(), rng);
    auto P2 = build_polyhedron(minimalize_generators(noisy));
    REQUIRE(P.facets.size() == P2.facets.size());
    for (std::size_t i = 0; i < P.facets.size(); ++i) {
      CHECK(same(P.facets[i].normal, P2.facets[i].normal));
      CHECK(P.facets[i].constant == P2.facets[i].constant);
    }
    REQUIRE(P.vertices.size() == P2.vertices.size());
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
      CHECK(same(P.vertices[i], P2.vertices[i]));
  }
}

TEST_CASE("enumerate_faces for the two-generator staircase") {
  auto P = build_polyhedron(ideal2({{1, 4}, {3, 1}}));
  auto faces = enumerate_faces(P);
  // P itself, 3 facets, 2 vertices
  CHECK(faces.size() == 6);
  int proper = 0, whole = 0;
  for (const Face& f : faces) {
    if (f.whole)
      ++whole;
    else
      ++proper;
  }
  CHECK(whole == 1);
  CHECK(proper == 5);
  // none of them lies in a coordinate hyperplane (all data positive)
  for (const Face& f : faces) CHECK(!f.in_coordinate_hyperplane);
}

TEST_CASE("enumerate_faces for (x y) and (x^a, y^b)") {
  auto P = build_polyhedron(ideal2({{1, 1}}));
  auto faces = enumerate_faces(P);
  CHECK(faces.size() == 4);  // P, two edges, one vertex

  auto P2 = build_polyhedron(ideal2({{2, 0}, {0, 3}}));
  auto faces2 = enumerate_faces(P2);
  CHECK(faces2.size() == 6);
  int flagged = 0, eligible = 0;
  for (const Face& f : faces2) {
    if (f.in_coordinate_hyperplane) ++flagged;
    if (f.eligible()) ++eligible;
  }
  // axis rays and axis vertices are flagged; only the diagonal is eligible
  CHECK(flagged == 4);
  CHECK(eligible == 1);
}

TEST_CASE("face in a positive-height coordinate-parallel hyperplane is kept") {
  // horizontal facet at height y = 1 must stay eligible
  auto P = build_polyhedron(ideal2({{1, 4}, {3, 1}}));
  auto faces = enumerate_faces(P);
  bool found = false;
  for (const Face& f : faces) {
    if (f.whole || f.dim != 1) continue;
    if (!f.functional) continue;
    QVec L = *f.functional;
    if (L[0] == 0 && L[1] == Rational(1)) found = true;  // L = y at height 1
  }
  CHECK(found);
}

TEST_CASE("face_functional examples") {
  auto P = build_polyhedron(ideal2({{2, 0}, {0, 3}}));
  auto faces = enumerate_faces(P);
  for (const Face& f : faces) {
    if (!f.eligible()) continue;
    REQUIRE(f.functional.has_value());
    CHECK(same(*f.functional, qvec({Rational(1, 2), Rational(1, 3)})));
  }

  long a1 = 1, b1 = 4, a2 = 3, b2 = 1;
  auto P2 = build_polyhedron(ideal2({{a1, b1}, {a2, b2}}));
  auto faces2 = enumerate_faces(P2);
  Integer det(b1 * a2 - a1 * b2);
  for (const Face& f : faces2) {
    if (f.whole) continue;
    REQUIRE(f.functional.has_value());
    const QVec& L = *f.functional;
    if (f.dim == 1 && L[0] != 0 && L[1] != 0) {
      // the diagonal: L = ((b1-b2)/det, (a2-a1)/det)
      Rational lx(b1 - b2, det), ly(a2 - a1, det);
      lx.canonicalize();
      ly.canonicalize();
      CHECK(L[0] == lx);
      CHECK(L[1] == ly);
    }
    if (f.dim == 0 && same(f.vertices[0], zvec({a1, b1}))) {
      // canonical minimal-support choice keeps the leading variable
      CHECK(L[0] == Rational(1, a1));
      CHECK(L[1] == 0);
    }
    // validity: L == 1 on every vertex, 0 on every ray
    for (const ZVec& v : f.vertices) {
      Rational s(0);
      for (Eigen::Index i = 0; i < 2; ++i) s += L[i] * Rational(v[i]);
      CHECK(s == 1);
    }
    for (int r : f.rays) CHECK(L[r] == 0);
  }
}

TEST_CASE("face_functional canonicalizations agree on the face span") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> d(0, 5);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ZVec> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      ZVec g = zvec({d(rng), d(rng)});
      if (g[0] == 0 && g[1] == 0) g[0] = 1;
      gens.push_back(g);
    }
    auto ideal = minimalize_generators(gens);
    auto P = build_polyhedron(ideal);
    for (const Face& f : enumerate_faces(P)) {
      if (!f.eligible()) continue;
      QVec L1 = face_functional(f, P.dim, {1, 0});
      QVec L2 = face_functional(f, P.dim, {0, 1});
      // values agree on every vertex and every ray of the face
      for (const ZVec& v : f.vertices) {
        Rational s1(0), s2(0);
        for (Eigen::Index i = 0; i < 2; ++i) {
          s1 += L1[i] * Rational(v[i]);
          s2 += L2[i] * Rational(v[i]);
        }
        CHECK(s1 == s2);
      }
      for (int r : f.rays) CHECK(L1[r] == L2[r]);
    }
  }
}

TEST_CASE("facet_m examples") {
  auto P = build_polyhedron(ideal2({{2, 0}, {0, 3}}));
  const FacetData* diag = find_facet(P, {3, 2}, 6);
  REQUIRE(diag != nullptr);
  CHECK(facet_m(*diag) == 6);

  auto P2 = build_polyhedron(ideal2({{1, 1}}));
  for (const FacetData& f : P2.facets) {
    CHECK(!f.is_coordinate);
    CHECK(facet_m(f) == 1);  // integral functionals x and y
  }

  FacetData coord;
  coord.normal = zvec({1, 0});
  coord.constant = 0;
  coord.is_coordinate = true;
  CHECK_THROWS_AS(facet_m(coord), std::invalid_argument);
}

TEST_CASE("ideal parsing") {
  auto i1 = parse_ideal("x^2, y^3");
  CHECK(i1.dim == 2);
  CHECK(i1.generators.size() == 2);
  CHECK(i1.names == std::vector<std::string>{"x", "y"});

  auto i2 = parse_ideal("x^2*y^7");
  REQUIRE(i2.generators.size() == 1);
  CHECK(same(i2.generators[0], zvec({2, 7})));

  auto i3 = parse_ideal("{\"vars\": 2, \"generators\": [[2,0],[0,3]]}");
  CHECK(i3.generators.size() == 2);

  CHECK_THROWS_AS(parse_ideal("x^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal("3*x"), std::invalid_argument);
  CHECK(parse_ideal("x^0").is_unit());

  // round-trip through JSON
  auto j = ideal_to_json(i1);
  auto back = parse_ideal(j);
  CHECK(back.dim == i1.dim);
  REQUIRE(back.generators.size() == i1.generators.size());
  for (std::size_t k = 0; k < back.generators.size(); ++k)
    CHECK(same(back.generators[k], i1.generators[k]));
}
