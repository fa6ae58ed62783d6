#include "latticeforge/linalg.hpp"

#include <random>

#include "doctest.h"

using namespace latticeforge;

TEST_CASE("determinants of small matrices") {
  CHECK(determinant({{Int(5)}}) == 5);
  CHECK(determinant({{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
  CHECK(determinant({{Int(2), Int(0), Int(0)}, {Int(0), Int(3), Int(0)}, {Int(0), Int(0), Int(4)}}) ==
        24);
  // Permutation matrix: sign of a transposition.
  CHECK(determinant({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
  // Singular.
  CHECK(determinant({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 0);
  // 4x4 with known cofactor expansion value.
  IntMatrix m = {{Int(1), Int(0), Int(2), Int(-1)},
                 {Int(3), Int(0), Int(0), Int(5)},
                 {Int(2), Int(1), Int(4), Int(-3)},
                 {Int(1), Int(0), Int(5), Int(0)}};
  CHECK(determinant(m) == 30);
}

TEST_CASE("determinant is multiplicative on random integer matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int iter = 0; iter < 25; ++iter) {
    const int n = 3;
    IntMatrix a(n, std::vector<Int>(n)), b(n, std::vector<Int>(n)), c(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = dist(rng);
        b[i][j] = dist(rng);
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int k = 0; k < n; ++k) s += a[i][k] * b[k][j];
        c[i][j] = s;
      }
    CHECK(determinant(c) == determinant(a) * determinant(b));
  }
}

TEST_CASE("matrix rank") {
  CHECK(matrix_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
  CHECK(matrix_rank({{Int(1), Int(0)}, {Int(0), Int(1)}}) == 2);
  CHECK(matrix_rank({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
  CHECK(matrix_rank({{Int(1), Int(2), Int(3)}, {Int(4), Int(5), Int(6)}, {Int(7), Int(8), Int(9)}}) ==
        2);
  // Wide and tall shapes.
  CHECK(matrix_rank({{Int(1), Int(2), Int(3)}}) == 1);
  CHECK(matrix_rank({{Int(1)}, {Int(2)}, {Int(3)}}) == 1);
}

TEST_CASE("orthogonal vector is orthogonal and detects dependence") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int iter = 0; iter < 40; ++iter) {
    const int d = 2 + static_cast<int>(rng() % 3);  // 2..4
    std::vector<LatticeVector> rows;
    for (int i = 0; i + 1 < d; ++i) {
      LatticeVector v(d);
      for (int j = 0; j < d; ++j) v[j] = dist(rng);
      rows.push_back(v);
    }
    LatticeVector n = orthogonal_vector(rows);
    for (const auto& r : rows) CHECK(dot(n, r) == 0);
  }
  // Dependent rows give the zero vector.
  LatticeVector z = orthogonal_vector({LatticeVector{Int(1), Int(2), Int(3)},
                                       LatticeVector{Int(2), Int(4), Int(6)}});
  CHECK(z == LatticeVector{Int(0), Int(0), Int(0)});
  // d = 2: rotate by 90 degrees.
  LatticeVector n2 = orthogonal_vector({LatticeVector{Int(3), Int(4)}});
  CHECK(dot(n2, LatticeVector{Int(3), Int(4)}) == 0);
  CHECK(!(n2 == LatticeVector{Int(0), Int(0)}));
}

TEST_CASE("rational solve round trip") {
  std::vector<LatticeVector> basis = {LatticeVector{Int(2), Int(0), Int(1)},
                                      LatticeVector{Int(0), Int(3), Int(1)}};
  // target = (1/2) b0 + (2/3) b1 = (1, 2, 7/6) -> not integral, use scaled target.
  // 3*b0 + (-2)*b1 = (6, -6, 1).
  auto c = solve_rational(basis, LatticeVector{Int(6), Int(-6), Int(1)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(3));
  CHECK((*c)[1] == Rational(-2));
  // Fractional combination: b0 + b1 = (2,3,2); half of it.
  auto h = solve_rational(basis, LatticeVector{Int(1), Int(1), Int(1)});
  // (1,1,1) = x*(2,0,1) + y*(0,3,1) -> x = 1/2, y = 1/3, checks z: 1/2+1/3 = 5/6 != 1.
  CHECK(!h.has_value());
  auto g = solve_rational(basis, LatticeVector{Int(1), Int(0), Int(0)});
  CHECK(!g.has_value());

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> dist(-8, 8);
  for (int iter = 0; iter < 30; ++iter) {
    const int d = 4;
    std::vector<LatticeVector> b;
    for (int i = 0; i < 3; ++i) {
      LatticeVector v(d);
      for (int j = 0; j < d; ++j) v[j] = dist(rng);
      b.push_back(v);
    }
    IntMatrix chk;
    for (const auto& v : b) chk.push_back(v.x);
    if (matrix_rank(chk) < 3) continue;
    // Build an exact combination with denominators, verify recovery.
    std::vector<Rational> want = {Rational(1, 2), Rational(-2, 3), Rational(5)};
    LatticeVector t(d);
    bool integral = true;
    for (int j = 0; j < d; ++j) {
      Rational s = want[0] * b[0][j] + want[1] * b[1][j] + want[2] * b[2][j];
      Rational scaled = s * 6;
      if (boost::multiprecision::denominator(scaled) != 1) {
        integral = false;
        break;
      }
      t[j] = Int(boost::multiprecision::numerator(scaled));
    }
    REQUIRE(integral);
    auto sol = solve_rational(b, t);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == want[0] * 6);
    CHECK((*sol)[1] == want[1] * 6);
    CHECK((*sol)[2] == want[2] * 6);
  }
}

TEST_CASE("primitive reduction") {
  LatticeVector v{Int(6), Int(-9), Int(12)};
  Int content;
  make_primitive(v, &content);
  CHECK(content == 3);
  CHECK(v == LatticeVector{Int(2), Int(-3), Int(4)});
  LatticeVector z{Int(0), Int(0)};
  make_primitive(z, &content);
  CHECK(content == 0);
  CHECK(z == LatticeVector{Int(0), Int(0)});
  LatticeVector p{Int(3), Int(5)};
  make_primitive(p, &content);
  CHECK(content == 1);
  CHECK(p == LatticeVector{Int(3), Int(5)});
}
