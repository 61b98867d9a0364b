#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsroots/affine.hpp"
#include "bsroots/lattice.hpp"
#include "bsroots/linalg.hpp"

#include <random>

using namespace bsr;

TEST_CASE("solve_linear identity") {
  QMat A = QMat::Identity(2, 2);
  QVec b = qvec({1, 2});
  auto sol = solve_linear(A, b);
  REQUIRE(sol.has_value());
  CHECK(same(sol->particular, qvec({1, 2})));
  CHECK(sol->kernel.empty());
}

TEST_CASE("solve_linear single row") {
  QMat A(1, 2);
  A << Rational(1), Rational(1);
  auto sol = solve_linear(A, qvec({1}));
  REQUIRE(sol.has_value());
  CHECK(same(sol->particular, qvec({1, 0})));
  REQUIRE(sol->kernel.size() == 1);
  CHECK(same(sol->kernel[0], qvec({1, -1})));
}

TEST_CASE("solve_linear inconsistent") {
  QMat A(2, 2);
  A << Rational(1), Rational(0), Rational(1), Rational(0);
  CHECK(!solve_linear(A, qvec({1, 2})).has_value());
}

TEST_CASE("solve_linear dimension mismatch") {
  QMat A = QMat::Identity(2, 2);
  CHECK_THROWS_AS(solve_linear(A, qvec({1})), std::invalid_argument);
}

TEST_CASE("solve_linear residual is exactly zero on random systems") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    QMat A(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Rational q(d(rng), den(rng));
        q.canonicalize();
        A(i, j) = q;
      }
    QVec x(cols);
    for (int j = 0; j < cols; ++j) x[j] = d(rng);
    QVec b = A * x;
    auto sol = solve_linear(A, b);
    REQUIRE(sol.has_value());
    QVec r = A * sol->particular - b;
    for (Eigen::Index i = 0; i < r.size(); ++i) CHECK(r[i] == 0);
    for (const QVec& k : sol->kernel) {
      QVec kr = A * k;
      for (Eigen::Index i = 0; i < kr.size(); ++i) CHECK(kr[i] == 0);
    }
  }
}

TEST_CASE("rational arithmetic matches integer cross-multiplication") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int i = 0; i < 500; ++i) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(a, b), y(c, d);
    x.canonicalize();
    y.canonicalize();
    Rational sum = x + y;
    Rational brute(a * d + c * b, b * d);
    brute.canonicalize();
    CHECK(sum == brute);
    CHECK(sum.get_den() > 0);
    CHECK(gcd(Integer(sum.get_num()), Integer(sum.get_den())) == 1);
  }
}

TEST_CASE("hermite_form canonical example") {
  IntegerLattice L =
      hermite_form({zvec({2, 0}), zvec({0, 2}), zvec({1, 1})}, 2);
  REQUIRE(L.lattice_rank() == 2);
  CHECK(same(ZVec(L.basis.row(0).transpose()), zvec({1, 1})));
  CHECK(same(ZVec(L.basis.row(1).transpose()), zvec({0, 2})));

  // enumeration in [0,2]^2 agrees between generator description and basis
  auto member_of = [](const std::vector<ZVec>& gens, long x, long y) {
    std::vector<long> coef(gens.size(), -4);
    while (true) {
      long cx = 0, cy = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        cx += coef[i] * gens[i][0].get_si();
        cy += coef[i] * gens[i][1].get_si();
      }
      if (cx == x && cy == y) return true;
      std::size_t i = 0;
      while (i < gens.size()) {
        if (++coef[i] <= 4) break;
        coef[i] = -4;
        ++i;
      }
      if (i == gens.size()) return false;
    }
  };
  std::vector<ZVec> gens{zvec({2, 0}), zvec({0, 2}), zvec({1, 1})};
  std::vector<ZVec> basis{zvec({1, 1}), zvec({0, 2})};
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 2; ++y)
      CHECK(member_of(gens, x, y) == member_of(basis, x, y));
}

TEST_CASE("hermite_form standard and zero lattices") {
  IntegerLattice L = hermite_form({zvec({1, 0}), zvec({0, 1})}, 2);
  CHECK(same(ZVec(L.basis.row(0).transpose()), zvec({1, 0})));
  CHECK(same(ZVec(L.basis.row(1).transpose()), zvec({0, 1})));
  IntegerLattice Z = hermite_form({}, 3);
  CHECK(Z.is_zero());
  CHECK(lattice_contains(Z, zvec({0, 0, 0})));
}

TEST_CASE("hermite_form idempotent and order independent") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 3);
    std::vector<ZVec> vs;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      ZVec v(n);
      for (Eigen::Index j = 0; j < n; ++j) v[j] = d(rng);
      vs.push_back(v);
    }
    IntegerLattice L1 = hermite_form(vs, n);
    std::shuffle(vs.begin(), vs.end(), rng);
    IntegerLattice L2 = hermite_form(vs, n);
    CHECK(L1.basis == L2.basis);
    std::vector<ZVec> rows;
    for (Eigen::Index i = 0; i < L1.basis.rows(); ++i)
      rows.push_back(L1.basis.row(i).transpose());
    IntegerLattice L3 = hermite_form(rows, n);
    CHECK(L1.basis == L3.basis);
  }
}

TEST_CASE("lattice_contains examples") {
  IntegerLattice L = hermite_form({zvec({1, 1}), zvec({0, 2})}, 2);
  CHECK(lattice_contains(L, zvec({3, 5})));   // 3*(1,1) + 1*(0,2)
  CHECK(!lattice_contains(L, zvec({1, 0})));  // parity of the coordinate sum
  CHECK_THROWS_AS(lattice_contains(L, zvec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("lattice_contains agrees with bounded brute force") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ZVec> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) gens.push_back(zvec({d(rng), d(rng)}));
    IntegerLattice L = hermite_form(gens, 2);
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y) {
        bool brute = false;
        for (long a = -9; a <= 9 && !brute; ++a)
          for (long b = -9; b <= 9 && !brute; ++b)
            for (long c = -9; c <= 9 && !brute; ++c) {
              long cx = 0, cy = 0;
              long coef[3] = {a, b, c};
              for (int i = 0; i < count; ++i) {
                cx += coef[i] * gens[static_cast<std::size_t>(i)][0].get_si();
                cy += coef[i] * gens[static_cast<std::size_t>(i)][1].get_si();
              }
              brute = (cx == x && cy == y);
            }
        CHECK(lattice_contains(L, zvec({x, y})) == brute);
      }
  }
}

TEST_CASE("integer_kernel is saturated") {
  ZMat A(1, 2);
  A << 2, -2;  // kernel should be generated by (1,1), not (2,2)
  auto ker = integer_kernel(A);
  REQUIRE(ker.size() == 1);
  CHECK(abs(ker[0][0]) == 1);
  CHECK(ker[0][0] == ker[0][1]);
}

TEST_CASE("span_lattice of a rational line") {
  QMat B(2, 1);
  B << Rational(1, 2), Rational(3, 4);
  // V = span{(1/2, 3/4)} = span{(2,3)}; V ∩ Z^2 = Z(2,3)
  IntegerLattice L = span_lattice(B);
  REQUIRE(L.lattice_rank() == 1);
  CHECK(same(ZVec(L.basis.row(0).transpose()), zvec({2, 3})));
}

TEST_CASE("affine_span examples") {
  auto s1 = affine_span({qvec({2, 0}), qvec({0, 3})});
  CHECK(same(s1.base, qvec({2, 0})));
  REQUIRE(s1.directions.size() == 1);
  CHECK(same(s1.directions[0], qvec({-2, 3})));
  CHECK(rank(linear_span({qvec({2, 0}), qvec({0, 3})})) == 2);

  auto s2 = affine_span({qvec({1, 1})});
  CHECK(same(s2.base, qvec({1, 1})));
  CHECK(s2.directions.empty());

  auto s3 = affine_span({qvec({1, 0}), qvec({2, 0}), qvec({3, 0})});
  CHECK(same(s3.base, qvec({1, 0})));
  REQUIRE(s3.directions.size() == 1);
  CHECK(same(s3.directions[0], qvec({1, 0})));

  CHECK_THROWS_AS(affine_span({}), std::invalid_argument);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-15/7") == Rational(-15, 7));
  CHECK(parse_rational("4") == Rational(4));
  Rational q(-5, 10);
  q.canonicalize();
  CHECK(to_string(q) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("rational_gcd") {
  CHECK(rational_gcd({Rational(1, 2), Rational(1, 3)}) == Rational(1, 6));
  CHECK(rational_gcd({Rational(0), Rational(0)}) == 0);
  CHECK(rational_gcd({Rational(-3, 4), Rational(1, 2)}) == Rational(1, 4));
}
