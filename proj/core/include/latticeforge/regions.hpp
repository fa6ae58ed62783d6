#pragma once

#include <functional>
#include <vector>

#include "latticeforge/polytope.hpp"

namespace latticeforge {

enum class RegionShape { simplex, ball, orthant_ball, paraboloid, polytope };

const char* region_shape_name(RegionShape s);
RegionShape parse_region_shape(const std::string& name);

// A closed convex region whose lattice points the workbench consumes:
//   simplex       x >= 0, sum x_i <= r
//   ball          sum x_i^2 <= r^2
//   orthant_ball  ball restricted to x >= 0
//   paraboloid    x >= 0, x_1^2+...+x_{d-1}^2 <= x_d <= r^2
//   polytope      an explicit ConvexLatticePolytope (r ignored)
// r may be any positive rational; all membership tests are exact.
struct Region {
  RegionShape shape = RegionShape::ball;
  int d = 0;
  Rational r = 0;
  ConvexLatticePolytope poly;  // used only when shape == polytope

  static Region simplex(int d, const Rational& r) { return {RegionShape::simplex, d, r, {}}; }
  static Region ball(int d, const Rational& r) { return {RegionShape::ball, d, r, {}}; }
  static Region orthant_ball(int d, const Rational& r) {
    return {RegionShape::orthant_ball, d, r, {}};
  }
  static Region paraboloid(int d, const Rational& r) {
    return {RegionShape::paraboloid, d, r, {}};
  }
  static Region polytope(ConvexLatticePolytope p) {
    Region reg{RegionShape::polytope, p.d, 0, std::move(p)};
    return reg;
  }
};

// Exact membership test.
bool region_contains(const Region& region, const LatticeVector& p);

// Lattice points grouped into columns along the last axis: for each base
// tuple (first d-1 coordinates) the contiguous integer range [lo, hi]. The
// callback receives (base, lo, hi); empty columns are skipped. For d = 1 a
// single column with an empty base is produced.
void for_each_column(const Region& region,
                     const std::function<void(const LatticeVector&, const Int&, const Int&)>& fn);

// Exact number of lattice points (no materialization).
Int count_lattice_points(const Region& region);

// Default enumeration budget: LATTICEFORGE_BUDGET env override, else 10^8.
Int default_point_budget();

// All lattice points of the region. Raises a resource error naming the exact
// count when it exceeds the budget (budget < 0 selects the default budget).
std::vector<LatticeVector> lattice_points(const Region& region, const Int& budget = -1);

// Column extremes: for every column the lo and hi endpoint. Every vertex of
// the integer hull of the region is among these (an interior column point is
// a convex combination of the endpoints), so hulls can be built from this
// much smaller set.
std::vector<LatticeVector> hull_candidates(const Region& region);

}  // namespace latticeforge
