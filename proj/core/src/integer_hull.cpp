#include "latticeforge/integer_hull.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "latticeforge/errors.hpp"
#include "latticeforge/hull.hpp"

namespace latticeforge {

namespace {

Region make_round_region(RegionShape shape, int d, const Rational& r) {
  switch (shape) {
    case RegionShape::simplex:
      return Region::simplex(d, r);
    case RegionShape::ball:
      return Region::ball(d, r);
    case RegionShape::orthant_ball:
      return Region::orthant_ball(d, r);
    case RegionShape::paraboloid:
      return Region::paraboloid(d, r);
    case RegionShape::polytope:
      break;
  }
  throw DomainError("integer_hull: polytope regions have no radius; use subset_hull");
}

// Budget gate shared by the hull entry points: the *region's* exact lattice
// point count must fit, even though hulls only ever touch column extremes.
Int checked_count(const Region& region, const Int& budget) {
  const Int cap = budget < 0 ? default_point_budget() : budget;
  Int total = count_lattice_points(region);
  if (total > cap)
    throw ResourceError("region holds " + total.str() + " lattice points, over the budget of " +
                        cap.str());
  return total;
}

Dec dec_pow(const Dec& base, int exp) {
  Dec out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Rational rat_pow(const Rational& base, int exp) {
  Rational out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_radii(const std::vector<Rational>& radii) {
  require_domain(!radii.empty(), "scan: needs at least one radius");
  for (const Rational& r : radii) require_domain(r > 0, "scan: radii must be positive");
}

}  // namespace

double hull_growth_exponent(int d) {
  require_domain(d >= 2, "hull_growth_exponent: needs d >= 2");
  return static_cast<double>(d) * (d - 1) / (d + 1);
}

double closeness_exponent(int d) {
  require_domain(d >= 2, "closeness_exponent: needs d >= 2");
  return -static_cast<double>(d - 1) / (d + 1);
}

IntegerHullReport integer_hull(RegionShape shape, int d, const Rational& r, const Int& budget) {
  Region region = make_round_region(shape, d, r);
  IntegerHullReport rep;
  rep.shape = shape;
  rep.d = d;
  rep.r = r;
  rep.point_count = checked_count(region, budget);
  rep.hull = convex_hull(hull_candidates(region), d);
  rep.f0 = Int(rep.hull.vertices.size());
  bool first = true;
  for (const LatticeVector& v : rep.hull.vertices) {
    require_invariant(region_contains(region, v),
                      "integer_hull: hull vertex " + v.str() + " escapes the region");
    if (all_positive(v)) rep.positive_vertices.push_back(v);
    const Int nsq = squared_norm(v);
    if (first || nsq < rep.min_vertex_norm_sq) {
      rep.min_vertex_norm_sq = nsq;
      first = false;
    }
  }
  rep.max_closeness = to_dec(r) - sqrt(to_dec(rep.min_vertex_norm_sq));
  return rep;
}

bool closeness_at_most(const Rational& r, const Int& norm_sq, const Rational& t) {
  require_domain(norm_sq >= 0, "closeness_at_most: negative squared norm");
  // r - sqrt(n) <= t  <=>  r - t <= sqrt(n).
  const Rational s = r - t;
  if (s <= 0) return true;
  return s * s <= Rational(norm_sq);
}

Int minkowski_lens_count(int d, const Rational& r, const LatticeVector& x) {
  require_domain(d >= 1 && static_cast<int>(x.size()) == d,
                 "minkowski_lens_count: dimension mismatch");
  require_domain(r > 0, "minkowski_lens_count: radius must be positive");
  const Int r2 = floor_rat(r * r);
  const Int xsq = squared_norm(x);
  require_domain(xsq <= r2, "minkowski_lens_count: center " + x.str() + " lies outside the ball");

  // Any lens point z satisfies |z|^2 + |2x-z|^2 <= 2r^2, i.e.
  // |z - x|^2 <= r^2 - |x|^2, so the walk over the first d-1 coordinates is
  // confined to that small box; the last coordinate is an exact range
  // intersection of the two balls.
  const Int rad2 = r2 - xsq;
  Int count = 0;
  LatticeVector z(d);
  const LatticeVector mirror_center = Int(2) * x;

  std::function<void(int, const Int&)> walk = [&](int axis, const Int& rem) {
    if (axis == d - 1) {
      Int sa = 0, sb = 0;
      for (int i = 0; i < d - 1; ++i) {
        sa += z[i] * z[i];
        const Int m = mirror_center[i] - z[i];
        sb += m * m;
      }
      if (sa > r2 || sb > r2) return;
      const Int A = isqrt(r2 - sa);
      const Int B = isqrt(r2 - sb);
      Int lo = -A, hi = A;
      if (mirror_center[d - 1] - B > lo) lo = mirror_center[d - 1] - B;
      if (mirror_center[d - 1] + B < hi) hi = mirror_center[d - 1] + B;
      if (lo > hi) return;
      count += hi - lo + 1;
      bool base_matches = true;
      for (int i = 0; i < d - 1; ++i)
        if (z[i] != x[i]) base_matches = false;
      if (base_matches && lo <= x[d - 1] && x[d - 1] <= hi) --count;  // exclude z == x
      return;
    }
    const Int h = isqrt(rem);
    for (Int t = x[axis] - h; t <= x[axis] + h; ++t) {
      z[axis] = t;
      const Int dd = (t - x[axis]) * (t - x[axis]);
      walk(axis + 1, rem - dd);
    }
  };
  walk(0, rad2);
  return count;
}

ConvexLatticePolytope subset_hull(const Region& region, const std::vector<LatticeVector>& removed,
                                  const Int& budget) {
  checked_count(region, budget);
  for (const LatticeVector& p : removed)
    require_domain(static_cast<int>(p.size()) == region.d,
                   "subset_hull: removed point dimension mismatch");
  const std::set<LatticeVector> gone(removed.begin(), removed.end());

  std::vector<LatticeVector> cands;
  const int d = region.d;
  for_each_column(region, [&](const LatticeVector& base, const Int& lo, const Int& hi) {
    LatticeVector p(d);
    for (int i = 0; i < d - 1; ++i) p[i] = base[i];
    Int a = lo, b = hi;
    auto erased = [&](const Int& t) {
      p[d - 1] = t;
      return gone.count(p) != 0;
    };
    while (a <= b && erased(a)) ++a;
    if (a > b) return;  // column fully removed
    while (b > a && erased(b)) --b;
    p[d - 1] = a;
    cands.push_back(p);
    if (b != a) {
      p[d - 1] = b;
      cands.push_back(p);
    }
  });
  require_domain(!cands.empty(), "subset_hull: no lattice points survive the removal");
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return convex_hull(cands, d);
}

Dec region_volume(RegionShape shape, int d, const Rational& r) {
  require_domain(d >= 1, "region_volume: dimension must be at least 1");
  require_domain(r >= 0, "region_volume: radius must be non-negative");
  const Dec rd = to_dec(r);
  switch (shape) {
    case RegionShape::simplex:
      return to_dec(rat_pow(r, d) / Rational(factorial(static_cast<unsigned>(d))));
    case RegionShape::ball:
      if (d == 1) return 2 * rd;
      return unit_ball_volume(d) * dec_pow(rd, d);
    case RegionShape::orthant_ball:
      if (d == 1) return rd;
      return unit_ball_volume(d) * dec_pow(rd, d) / dec_pow(Dec(2), d);
    case RegionShape::paraboloid:
      // Integral of (r^2 - |z|^2) over the non-negative base points with
      // |z| <= r, in closed form per base dimension.
      if (d == 2) return to_dec(rat_pow(r, 3) * 2 / 3);  // rational, so keep it exact
      if (d == 3) return dec_pi() * dec_pow(rd, 4) / 8;
      if (d == 4) return dec_pi() * dec_pow(rd, 5) / 15;
      throw DomainError("region_volume: paraboloid supported for d in {2,3,4}");
    case RegionShape::polytope:
      break;
  }
  throw DomainError("region_volume: polytope regions carry exact volumes already");
}

CapVolume missed_cap_volume(RegionShape shape, int d, const Rational& r, const Int& budget) {
  const IntegerHullReport rep = integer_hull(shape, d, r, budget);
  CapVolume cv;
  cv.hull_normalized = rep.hull.normalized_volume;
  cv.hull_volume = Rational(cv.hull_normalized) / Rational(factorial(static_cast<unsigned>(d)));
  cv.region_vol = region_volume(shape, d, r);
  cv.gap = cv.region_vol - to_dec(cv.hull_volume);
  require_invariant(cv.gap >= 0, "missed_cap_volume: hull volume exceeds the region volume");
  return cv;
}

ParaboloidCheck paraboloid_vertex_check(int d, const Rational& r) {
  require_domain(d == 2 || d == 3, "paraboloid_vertex_check: supported for d in {2,3}");
  require_domain(r > 0, "paraboloid_vertex_check: radius must be positive");
  const IntegerHullReport rep = integer_hull(RegionShape::paraboloid, d, r);
  const std::vector<LatticeVector>& vs = rep.hull.vertices;

  ParaboloidCheck check;
  const Int r2 = floor_rat(r * r);
  auto visit = [&](const LatticeVector& base, const Int& nsq) {
    LatticeVector lifted(d);
    for (int i = 0; i < d - 1; ++i) lifted[i] = base[i];
    lifted[d - 1] = nsq;
    ++check.expected;
    if (!std::binary_search(vs.begin(), vs.end(), lifted)) check.counterexamples.push_back(lifted);
  };
  if (d == 2) {
    const Int top = isqrt(r2);
    for (Int z = 0; z <= top; ++z) visit(LatticeVector{z}, z * z);
  } else {
    const Int top = isqrt(r2);
    for (Int z1 = 0; z1 <= top; ++z1) {
      const Int rest = r2 - z1 * z1;
      const Int top2 = isqrt(rest);
      for (Int z2 = 0; z2 <= top2; ++z2) visit(LatticeVector{z1, z2}, z1 * z1 + z2 * z2);
    }
  }
  check.ok = check.counterexamples.empty();
  return check;
}

ScalingFit closeness_scan(int d, const std::vector<Rational>& radii) {
  require_radii(radii);
  std::vector<FitRow> rows;
  for (const Rational& r : radii) {
    const IntegerHullReport rep = integer_hull(RegionShape::ball, d, r);
    for (const LatticeVector& v : rep.hull.vertices)
      require_invariant(minkowski_lens_count(d, r, v) == 0,
                        "closeness_scan: hull vertex " + v.str() + " at radius " + r.str() +
                            " is a midpoint of two lattice points of the ball");
    rows.push_back({r, rep.max_closeness});
  }
  return fit_power_law(rows, closeness_exponent(d));
}

ScalingFit vertex_count_scan(RegionShape shape, int d, const std::vector<Rational>& radii) {
  require_radii(radii);
  std::vector<FitRow> rows;
  for (const Rational& r : radii) {
    const IntegerHullReport rep = integer_hull(shape, d, r);
    rows.push_back({r, to_dec(rep.f0)});
  }
  return fit_power_law(rows, hull_growth_exponent(d));
}

ScalingFit cap_gap_scan(RegionShape shape, int d, const std::vector<Rational>& radii) {
  require_radii(radii);
  std::vector<FitRow> rows;
  for (const Rational& r : radii) rows.push_back({r, missed_cap_volume(shape, d, r).gap});
  return fit_power_law(rows, hull_growth_exponent(d));
}

ScalingFit positive_vertex_scan(int d, const std::vector<Rational>& radii) {
  require_radii(radii);
  std::vector<FitRow> rows;
  for (const Rational& r : radii) {
    const IntegerHullReport rep = integer_hull(RegionShape::orthant_ball, d, r);
    rows.push_back({r, to_dec(Int(rep.positive_vertices.size()))});
  }
  return fit_power_law(rows, hull_growth_exponent(d));
}

ScalingFit positive_vertex_gap_scan(int d, const std::vector<Rational>& radii) {
  require_radii(radii);
  std::vector<FitRow> rows;
  for (const Rational& r : radii) {
    const IntegerHullReport rep = integer_hull(RegionShape::orthant_ball, d, r);
    const Region region = Region::orthant_ball(d, r);
    const ConvexLatticePolytope pruned = subset_hull(region, rep.positive_vertices);
    const Rational vol =
        Rational(pruned.normalized_volume) / Rational(factorial(static_cast<unsigned>(d)));
    const Dec gap = region_volume(RegionShape::orthant_ball, d, r) - to_dec(vol);
    require_invariant(gap >= 0,
                      "positive_vertex_gap_scan: pruned hull volume exceeds the region volume at "
                      "radius " + r.str());
    rows.push_back({r, gap});
  }
  return fit_power_law(rows, hull_growth_exponent(d));
}

}  // namespace latticeforge
