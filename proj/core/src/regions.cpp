#include "latticeforge/regions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "latticeforge/errors.hpp"
#include "latticeforge/numeric.hpp"

namespace latticeforge {

namespace {

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

void require_region(const Region& region) {
  if (region.shape == RegionShape::polytope) {
    require_domain(region.poly.d >= 1, "polytope region needs an ambient dimension");
    return;
  }
  require_domain(region.d >= 1, "region dimension must be at least 1");
  require_domain(region.r >= 0, "region radius must be nonnegative");
  if (region.shape == RegionShape::paraboloid) {
    require_domain(region.d >= 2, "paraboloid region needs dimension at least 2");
  }
}

int ambient_dim(const Region& region) {
  return region.shape == RegionShape::polytope ? region.poly.d : region.d;
}

// Largest integer s >= 0 with s^2 <= cap, or -1 when cap < 0.
Int isqrt_or_negative(const Int& cap) {
  if (cap < 0) return Int(-1);
  return isqrt(cap);
}

// Column range along the last axis over a fixed base tuple, for the
// full-dimensional facet representation. Returns false for an empty column.
bool polytope_column(const ConvexLatticePolytope& poly, const LatticeVector& base, Int& lo,
                     Int& hi) {
  const int d = poly.d;
  bool bounded_above = false;
  bool bounded_below = false;
  for (const Facet& f : poly.facets) {
    Int rhs = f.offset;
    for (int j = 0; j + 1 < d; ++j) rhs -= f.normal.x[j] * base.x[j];
    const Int& c = f.normal.x[d - 1];
    if (c == 0) {
      if (rhs < 0) return false;
    } else if (c > 0) {
      Int cap = floor_div(rhs, c);
      if (!bounded_above || cap < hi) hi = cap;
      bounded_above = true;
    } else {
      Int cap = ceil_div(rhs, c);
      if (!bounded_below || cap > lo) lo = cap;
      bounded_below = true;
    }
  }
  require_invariant(bounded_above && bounded_below, "polytope columns must be bounded");
  return lo <= hi;
}

// Lattice polytopes of lower dimension have no facet representation; their
// columns are still segments (convexity), found by scanning the bounding box.
bool degenerate_column(const ConvexLatticePolytope& poly, const LatticeVector& base, const Int& box_lo,
                       const Int& box_hi, Int& lo, Int& hi) {
  const int d = poly.d;
  LatticeVector p(d);
  for (int j = 0; j + 1 < d; ++j) p.x[j] = base.x[j];
  bool found = false;
  for (Int t = box_lo; t <= box_hi; ++t) {
    p.x[d - 1] = t;
    if (poly.contains(p)) {
      if (!found) lo = t;
      hi = t;
      found = true;
    } else if (found) {
      break;
    }
  }
  return found;
}

struct ColumnWalker {
  const Region& region;
  const std::function<void(const LatticeVector&, const Int&, const Int&)>& fn;
  int d;
  Int radius_sq_floor;   // floor(r^2) for the quadratic shapes
  Int sum_cap;           // floor(r) for the simplex
  std::vector<Int> box_lo, box_hi;  // per-coordinate bounds for polytope bases
  LatticeVector base;
  Int partial;  // running sum (simplex) or sum of squares (quadratics)

  void emit_column() {
    Int lo, hi;
    switch (region.shape) {
      case RegionShape::simplex:
        lo = 0;
        hi = sum_cap - partial;
        break;
      case RegionShape::ball: {
        Int s = isqrt_or_negative(radius_sq_floor - partial);
        if (s < 0) return;
        lo = -s;
        hi = s;
        break;
      }
      case RegionShape::orthant_ball: {
        Int s = isqrt_or_negative(radius_sq_floor - partial);
        if (s < 0) return;
        lo = 0;
        hi = s;
        break;
      }
      case RegionShape::paraboloid:
        if (partial > radius_sq_floor) return;
        lo = partial;
        hi = radius_sq_floor;
        break;
      case RegionShape::polytope:
        if (region.poly.full_dimensional()) {
          if (!polytope_column(region.poly, base, lo, hi)) return;
        } else {
          if (!degenerate_column(region.poly, base, box_lo[d - 1], box_hi[d - 1], lo, hi)) return;
        }
        break;
    }
    if (lo > hi) return;
    fn(base, lo, hi);
  }

  void recurse(int coord) {
    if (coord == d - 1) {
      emit_column();
      return;
    }
    Int lo, hi;
    switch (region.shape) {
      case RegionShape::simplex:
        lo = 0;
        hi = sum_cap - partial;
        break;
      case RegionShape::ball: {
        Int s = isqrt_or_negative(radius_sq_floor - partial);
        if (s < 0) return;
        lo = -s;
        hi = s;
        break;
      }
      case RegionShape::orthant_ball:
      case RegionShape::paraboloid: {
        Int s = isqrt_or_negative(radius_sq_floor - partial);
        if (s < 0) return;
        lo = 0;
        hi = s;
        break;
      }
      case RegionShape::polytope:
        lo = box_lo[coord];
        hi = box_hi[coord];
        break;
    }
    if (lo > hi) return;
    for (Int v = lo; v <= hi; ++v) {
      base.x[coord] = v;
      Int saved = partial;
      if (region.shape == RegionShape::simplex) {
        partial += v;
      } else if (region.shape != RegionShape::polytope) {
        partial += v * v;
      }
      recurse(coord + 1);
      partial = saved;
    }
  }
};

}  // namespace

const char* region_shape_name(RegionShape s) {
  switch (s) {
    case RegionShape::simplex: return "simplex";
    case RegionShape::ball: return "ball";
    case RegionShape::orthant_ball: return "orthant-ball";
    case RegionShape::paraboloid: return "paraboloid";
    case RegionShape::polytope: return "polytope";
  }
  throw InvariantError("unknown region shape");
}

RegionShape parse_region_shape(const std::string& name) {
  if (name == "simplex") return RegionShape::simplex;
  if (name == "ball") return RegionShape::ball;
  if (name == "orthant-ball" || name == "orthant_ball") return RegionShape::orthant_ball;
  if (name == "paraboloid") return RegionShape::paraboloid;
  if (name == "polytope") return RegionShape::polytope;
  throw DomainError("unknown region shape: " + name);
}

bool region_contains(const Region& region, const LatticeVector& p) {
  require_region(region);
  const int d = ambient_dim(region);
  require_domain(static_cast<int>(p.x.size()) == d, "point dimension mismatch");
  switch (region.shape) {
    case RegionShape::simplex: {
      Int sum = 0;
      for (const Int& v : p.x) {
        if (v < 0) return false;
        sum += v;
      }
      return Rational(sum) <= region.r;
    }
    case RegionShape::ball:
      return Rational(squared_norm(p)) <= region.r * region.r;
    case RegionShape::orthant_ball:
      return all_nonnegative(p) && Rational(squared_norm(p)) <= region.r * region.r;
    case RegionShape::paraboloid: {
      if (!all_nonnegative(p)) return false;
      Int head = 0;
      for (int j = 0; j + 1 < d; ++j) head += p.x[j] * p.x[j];
      return head <= p.x[d - 1] && Rational(p.x[d - 1]) <= region.r * region.r;
    }
    case RegionShape::polytope:
      return region.poly.contains(p);
  }
  throw InvariantError("unknown region shape");
}

void for_each_column(const Region& region,
                     const std::function<void(const LatticeVector&, const Int&, const Int&)>& fn) {
  require_region(region);
  const int d = ambient_dim(region);
  ColumnWalker walker{region, fn, d, 0, 0, {}, {}, LatticeVector(d > 1 ? d - 1 : 0), 0};
  if (region.shape == RegionShape::polytope) {
    if (region.poly.empty()) return;
    walker.box_lo.assign(d, region.poly.vertices.front().x[0]);
    walker.box_hi.assign(d, region.poly.vertices.front().x[0]);
    for (int j = 0; j < d; ++j) {
      walker.box_lo[j] = walker.box_hi[j] = region.poly.vertices.front().x[j];
      for (const LatticeVector& v : region.poly.vertices) {
        walker.box_lo[j] = std::min(walker.box_lo[j], v.x[j]);
        walker.box_hi[j] = std::max(walker.box_hi[j], v.x[j]);
      }
    }
  } else {
    walker.radius_sq_floor = floor_rat(region.r * region.r);
    walker.sum_cap = floor_rat(region.r);
  }
  walker.recurse(0);
}

Int count_lattice_points(const Region& region) {
  Int total = 0;
  for_each_column(region,
                  [&](const LatticeVector&, const Int& lo, const Int& hi) { total += hi - lo + 1; });
  return total;
}

Int default_point_budget() {
  if (const char* env = std::getenv("LATTICEFORGE_BUDGET")) {
    Rational parsed = parse_rational(env);
    Int value = floor_rat(parsed);
    require_domain(value > 0, "LATTICEFORGE_BUDGET must be a positive integer");
    return value;
  }
  return int_pow(10, 8);
}

std::vector<LatticeVector> lattice_points(const Region& region, const Int& budget) {
  Int cap = budget < 0 ? default_point_budget() : budget;
  Int total = count_lattice_points(region);
  if (total > cap) {
    throw ResourceError("region holds " + total.str() + " lattice points, over the budget of " +
                        cap.str());
  }
  std::vector<LatticeVector> pts;
  pts.reserve(static_cast<std::size_t>(to_int64(total)));
  const int d = ambient_dim(region);
  for_each_column(region, [&](const LatticeVector& base, const Int& lo, const Int& hi) {
    LatticeVector p(d);
    for (int j = 0; j + 1 < d; ++j) p.x[j] = base.x[j];
    for (Int t = lo; t <= hi; ++t) {
      p.x[d - 1] = t;
      pts.push_back(p);
    }
  });
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<LatticeVector> hull_candidates(const Region& region) {
  std::vector<LatticeVector> pts;
  const int d = ambient_dim(region);
  for_each_column(region, [&](const LatticeVector& base, const Int& lo, const Int& hi) {
    LatticeVector p(d);
    for (int j = 0; j + 1 < d; ++j) p.x[j] = base.x[j];
    p.x[d - 1] = lo;
    pts.push_back(p);
    if (hi != lo) {
      p.x[d - 1] = hi;
      pts.push_back(p);
    }
  });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace latticeforge
