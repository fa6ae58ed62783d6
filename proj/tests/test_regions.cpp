#include <cstdlib>
#include <set>
#include <vector>

#include "doctest.h"
#include "latticeforge/errors.hpp"
#include "latticeforge/polytope_ops.hpp"
#include "latticeforge/regions.hpp"

using namespace latticeforge;

namespace {

// Brute-force enumeration over a bounding box, exact membership per point.
std::vector<LatticeVector> brute_points(const Region& region, int d, long lo, long hi) {
  std::vector<LatticeVector> out;
  std::vector<long> idx(d, lo);
  while (true) {
    LatticeVector p(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) p[i] = idx[i];
    if (region_contains(region, p)) out.push_back(p);
    int k = d - 1;
    while (k >= 0 && idx[k] == hi) idx[k--] = lo;
    if (k < 0) break;
    ++idx[k];
  }
  return out;
}

}  // namespace

TEST_CASE("lattice point counts of the reference regions") {
  CHECK(count_lattice_points(Region::simplex(2, 2)) == 6);
  CHECK(count_lattice_points(Region::ball(2, 2)) == 13);
  CHECK(count_lattice_points(Region::orthant_ball(2, 3)) == 11);
  CHECK(count_lattice_points(Region::paraboloid(2, 2)) == 10);
  CHECK(count_lattice_points(Region::simplex(3, 3)) == 20);  // binomial(6, 3)
  CHECK(count_lattice_points(Region::ball(2, Rational(5) / 2)) == 21);
  CHECK(count_lattice_points(Region::ball(1, 3)) == 7);
  CHECK(count_lattice_points(Region::simplex(1, 3)) == 4);
  CHECK(count_lattice_points(Region::ball(3, 0)) == 1);
}

TEST_CASE("materialized points agree with brute force membership") {
  struct Case {
    Region region;
    long lo, hi;
  };
  std::vector<Case> cases = {
      {Region::simplex(2, 5), -1, 6},
      {Region::ball(2, 4), -5, 5},
      {Region::ball(2, Rational(7) / 2), -4, 4},
      {Region::orthant_ball(3, 3), -1, 4},
      {Region::paraboloid(2, 3), -1, 10},
      {Region::paraboloid(3, 2), -1, 5},
      {Region::ball(3, 2), -3, 3},
  };
  for (const auto& c : cases) {
    CAPTURE(region_shape_name(c.region.shape));
    auto fast = lattice_points(c.region);
    auto slow = brute_points(c.region, c.region.d, c.lo, c.hi);
    CHECK(fast == slow);
    CHECK(count_lattice_points(c.region) == Int(fast.size()));
  }
}

TEST_CASE("polytope regions enumerate both full and lower dimensional bodies") {
  auto S = corner_simplex(3, 3);
  auto reg = Region::polytope(S);
  CHECK(count_lattice_points(reg) == 20);
  auto pts = lattice_points(reg);
  for (const auto& p : pts) CHECK(S.contains(p));

  // The diagonal simplex is 2-dimensional inside 3-space: x+y+z = 3.
  auto diag = Region::polytope(diagonal_simplex(3, 3));
  CHECK(count_lattice_points(diag) == 10);

  // A single point.
  auto dot = Region::polytope(convex_hull({LatticeVector{2, 5}}, 2));
  CHECK(count_lattice_points(dot) == 1);
  CHECK(lattice_points(dot) == std::vector<LatticeVector>{{2, 5}});

  // A segment with interior lattice points.
  auto seg = Region::polytope(convex_hull({LatticeVector{0, 0, 0}, LatticeVector{3, 6, 9}}, 3));
  CHECK(count_lattice_points(seg) == 4);
}

TEST_CASE("membership tests are exact at the boundary") {
  CHECK(region_contains(Region::ball(2, 5), LatticeVector{3, 4}));
  CHECK_FALSE(region_contains(Region::ball(2, 5), LatticeVector{4, 4}));
  CHECK(region_contains(Region::orthant_ball(2, 5), LatticeVector{3, 4}));
  CHECK_FALSE(region_contains(Region::orthant_ball(2, 5), LatticeVector{-3, 4}));
  CHECK(region_contains(Region::simplex(2, 4), LatticeVector{2, 2}));
  CHECK_FALSE(region_contains(Region::simplex(2, 4), LatticeVector{2, 3}));
  CHECK(region_contains(Region::paraboloid(2, 3), LatticeVector{2, 4}));
  CHECK_FALSE(region_contains(Region::paraboloid(2, 3), LatticeVector{2, 3}));
  CHECK_FALSE(region_contains(Region::paraboloid(2, 3), LatticeVector{2, 10}));
  // Rational radius: 5/2 excludes (2, 2) but keeps (2, 1).
  CHECK(region_contains(Region::ball(2, Rational(5) / 2), LatticeVector{2, 1}));
  CHECK_FALSE(region_contains(Region::ball(2, Rational(5) / 2), LatticeVector{2, 2}));
}

TEST_CASE("column extremes carry the full integer hull") {
  for (const Region& region : {Region::ball(2, 5), Region::orthant_ball(2, 6),
                               Region::paraboloid(2, 3), Region::simplex(3, 4)}) {
    CAPTURE(region_shape_name(region.shape));
    auto all = lattice_points(region);
    auto cand = hull_candidates(region);
    CHECK(cand.size() <= all.size());
    std::set<LatticeVector> all_set(all.begin(), all.end());
    for (const auto& c : cand) CHECK(all_set.count(c) == 1);
    int d = region.d;
    auto from_all = convex_hull(all, d);
    auto from_cand = convex_hull(cand, d);
    CHECK(from_all.vertices == from_cand.vertices);
    CHECK(from_all.normalized_volume == from_cand.normalized_volume);
  }
}

TEST_CASE("column extreme counts stay small for large planar balls") {
  auto cand = hull_candidates(Region::ball(2, 4096));
  CHECK(cand.size() <= 2 * 8193);
  CHECK(count_lattice_points(Region::ball(2, 4096)) > 50000000);
}

TEST_CASE("point budget failures name the exact count") {
  auto region = Region::ball(2, 50);
  Int count = count_lattice_points(region);
  CHECK(count == 7845);
  try {
    lattice_points(region, 10);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    std::string msg = e.what();
    CHECK(msg.find("7845") != std::string::npos);
    CHECK(msg.find("10") != std::string::npos);
  }
  // A budget at the exact count succeeds.
  CHECK(lattice_points(region, count).size() == 7845);
}

TEST_CASE("the default budget honors the environment override") {
  unsetenv("LATTICEFORGE_BUDGET");
  CHECK(default_point_budget() == Int(100000000));
  setenv("LATTICEFORGE_BUDGET", "5000", 1);
  CHECK(default_point_budget() == 5000);
  setenv("LATTICEFORGE_BUDGET", "0", 1);
  CHECK_THROWS_AS(default_point_budget(), DomainError);
  unsetenv("LATTICEFORGE_BUDGET");
}

TEST_CASE("region shape names round trip") {
  for (RegionShape s : {RegionShape::simplex, RegionShape::ball, RegionShape::orthant_ball,
                        RegionShape::paraboloid, RegionShape::polytope}) {
    CHECK(parse_region_shape(region_shape_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_region_shape("torus"), DomainError);
}

TEST_CASE("region input validation") {
  CHECK_THROWS_AS(count_lattice_points(Region::ball(0, 3)), DomainError);
  CHECK_THROWS_AS(count_lattice_points(Region::ball(2, -1)), DomainError);
  CHECK_THROWS_AS(count_lattice_points(Region::paraboloid(1, 3)), DomainError);
  CHECK_THROWS_AS(region_contains(Region::ball(2, 3), LatticeVector{1, 2, 3}), DomainError);
}
