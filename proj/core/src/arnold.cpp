#include "latticeforge/arnold.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "latticeforge/construction.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/hull.hpp"
#include "latticeforge/regions.hpp"

namespace latticeforge {

namespace {

// Smallest t >= 0 with t^d >= m.
Int ceil_root(const Int& m, unsigned d) {
  if (m <= 0) return 0;
  Int lo = 0, hi = 1;
  while (int_pow(hi, d) < m) hi <<= 1;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (int_pow(mid, d) >= m) hi = mid;
    else lo = mid + 1;
  }
  return hi;
}

LatticeVector axis_point(int d, int axis, const Int& value) {
  std::vector<Int> c(static_cast<std::size_t>(d), Int(0));
  c[static_cast<std::size_t>(axis)] = value;
  return LatticeVector(c);
}

// The k-th axis keeps markers {r e_k, (r-1) e_k, ..., (r-k) e_k}: k+1 points.
std::vector<LatticeVector> axis_markers(int d, const Int& r) {
  std::vector<LatticeVector> M;
  for (int k = 0; k < d; ++k)
    for (Int j = 0; j <= k; ++j) M.push_back(axis_point(d, k, r - j));
  std::sort(M.begin(), M.end());
  return M;
}

Region family_region(const FamilySpec& spec) {
  return Region::orthant_ball(spec.d, Rational(spec.r));
}

void require_subset_of(const std::vector<LatticeVector>& Z,
                       const std::vector<LatticeVector>& sorted_X,
                       const char* who) {
  for (const auto& z : Z)
    require_domain(std::binary_search(sorted_X.begin(), sorted_X.end(), z),
                   std::string(who) + ": removed point " + z.str() +
                       " is not a positive hull vertex");
}

// Corner simplex vertices {0, rho e_1, ..., rho e_d} all inside P certify
// S(rho) <= P by convexity.
bool corner_simplex_inside(const ConvexLatticePolytope& P, int d, const Int& rho) {
  if (!P.contains(LatticeVector(std::vector<Int>(static_cast<std::size_t>(d), Int(0)))))
    return false;
  for (int k = 0; k < d; ++k)
    if (!P.contains(axis_point(d, k, rho))) return false;
  return true;
}

TrimmedPolytope trim_common(const FamilySpec& spec, std::vector<LatticeVector> Z,
                            bool marked) {
  std::sort(Z.begin(), Z.end());
  Z.erase(std::unique(Z.begin(), Z.end()), Z.end());
  require_subset_of(Z, spec.X, marked ? "marker_variant" : "trim_to_volume");

  TrimmedPolytope out;
  out.Z = Z;
  out.marked = marked;
  out.v_target = marked ? spec.v_target_marked : spec.v_target;
  out.removed = std::move(Z);
  if (marked) {
    out.removed.insert(out.removed.end(), spec.markers.begin(), spec.markers.end());
    std::sort(out.removed.begin(), out.removed.end());
  }

  out.Q_Z = latticeforge::subset_hull(family_region(spec), out.removed);
  out.m_Z = out.Q_Z.normalized_volume - out.v_target;
  const Int head = spec.rho - int_pow(2, static_cast<unsigned>(spec.d)) *
                                  factorial(static_cast<unsigned>(spec.d));
  require_invariant(out.m_Z >= 0 && out.m_Z <= int_pow(head, static_cast<unsigned>(spec.d)),
                    "trim: |Z|=" + std::to_string(out.Z.size()) + " needs trim " +
                        out.m_Z.str() + " outside the corner budget");

  const ConvexLatticePolytope corner = construct_missed(spec.d, spec.rho, out.m_Z).P;

  std::vector<LatticeVector> candidates;
  candidates.reserve(out.Q_Z.vertices.size() + corner.vertices.size());
  const LatticeVector origin(std::vector<Int>(static_cast<std::size_t>(spec.d), Int(0)));
  bool saw_origin = false;
  for (const auto& v : out.Q_Z.vertices) {
    if (v == origin) saw_origin = true;
    else candidates.push_back(v);
  }
  require_invariant(saw_origin, "trim: the subset hull lost its origin corner");
  candidates.insert(candidates.end(), corner.vertices.begin(), corner.vertices.end());

  out.P_star = convex_hull(candidates, spec.d);
  require_invariant(out.P_star.normalized_volume == out.v_target,
                    "trim: corner rewrite for |Z|=" + std::to_string(out.Z.size()) +
                        ", m_Z=" + out.m_Z.str() + " reached volume " +
                        out.P_star.normalized_volume.str() + " instead of " +
                        out.v_target.str());
  out.canonical = canonical_form(out.P_star);
  return out;
}

}  // namespace

FamilySpec base_family(int d, const Int& r) {
  require_domain(d == 2 || d == 3, "base_family: dimension must be 2 or 3");
  require_domain(r >= d, "base_family: radius too small for axis markers");

  FamilySpec spec;
  spec.d = d;
  spec.r = r;

  IntegerHullReport report = integer_hull(RegionShape::orthant_ball, d, Rational(r));
  spec.X = report.positive_vertices;
  std::sort(spec.X.begin(), spec.X.end());
  spec.v_empty = report.hull.normalized_volume;
  spec.markers = axis_markers(d, r);
  const Region region = Region::orthant_ball(d, Rational(r));
  for (const auto& mk : spec.markers)
    require_domain(region_contains(region, mk),
                   "base_family: marker point " + mk.str() + " lies outside the hull");

  const ConvexLatticePolytope QX = latticeforge::subset_hull(region, spec.X);
  spec.v_target = QX.normalized_volume;
  spec.V_target = Rational(spec.v_target, factorial(static_cast<unsigned>(d)));
  spec.m_max = spec.v_empty - spec.v_target;

  std::vector<LatticeVector> XM = spec.X;
  XM.insert(XM.end(), spec.markers.begin(), spec.markers.end());
  const ConvexLatticePolytope QXM = latticeforge::subset_hull(region, XM);
  const ConvexLatticePolytope QM = latticeforge::subset_hull(region, spec.markers);
  spec.v_target_marked = QXM.normalized_volume;
  spec.m_max_marked = QM.normalized_volume - spec.v_target_marked;

  const Int base = int_pow(2, static_cast<unsigned>(d)) * factorial(static_cast<unsigned>(d));
  const Int need = spec.m_max > spec.m_max_marked ? spec.m_max : spec.m_max_marked;
  Int root = ceil_root(need, static_cast<unsigned>(d));
  if (root < 1) root = 1;
  spec.rho = base + root;
  require_domain(4 * spec.rho <= r,
                 "base_family: largest trim " + spec.m_max.str() +
                     " needs corner scale " + spec.rho.str() +
                     ", above the cap r/4 = " + Int(r / 4).str());

  require_invariant(spec.rho > base, "base_family: corner scale not above 2^d d!");
  require_invariant(corner_simplex_inside(QX, d, spec.rho) &&
                        corner_simplex_inside(QXM, d, spec.rho),
                    "base_family: corner simplex pokes out of the trimmed hull");
  return spec;
}

Int first_feasible_radius(int d, const Int& from, const Int& to) {
  for (Int r = from; r <= to; ++r) {
    try {
      base_family(d, r);
      return r;
    } catch (const DomainError&) {
      continue;
    }
  }
  throw DomainError("first_feasible_radius: no workable radius in [" + from.str() +
                    ", " + to.str() + "]");
}

ConvexLatticePolytope subset_hull(const FamilySpec& spec,
                                  const std::vector<LatticeVector>& Z) {
  std::vector<LatticeVector> sorted = Z;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  require_subset_of(sorted, spec.X, "subset_hull");
  ConvexLatticePolytope hull = latticeforge::subset_hull(family_region(spec), sorted);
  require_invariant(hull.normalized_volume >= spec.v_target &&
                        hull.normalized_volume <= spec.v_empty,
                    "subset_hull: volume " + hull.normalized_volume.str() +
                        " escapes [" + spec.v_target.str() + ", " +
                        spec.v_empty.str() + "]");
  return hull;
}

TrimmedPolytope trim_to_volume(const FamilySpec& spec,
                               const std::vector<LatticeVector>& Z) {
  return trim_common(spec, Z, false);
}

TrimmedPolytope marker_variant(const FamilySpec& spec,
                               const std::vector<LatticeVector>& Z) {
  return trim_common(spec, Z, true);
}

LongEdgeReport long_edges(const ConvexLatticePolytope& P, const Int& r,
                          const Rational& fraction) {
  require_domain(r >= 1, "long_edges: radius must be positive");
  require_domain(fraction > 0, "long_edges: threshold fraction must be positive");
  const Int num(boost::multiprecision::numerator(fraction));
  const Int den(boost::multiprecision::denominator(fraction));

  LongEdgeReport report;
  report.fraction = fraction;
  for (auto& [a, b] : faces_1(P)) {
    Int len_sq = 0;
    for (std::size_t i = 0; i < a.size(); ++i) len_sq += (b[i] - a[i]) * (b[i] - a[i]);
    if (len_sq * den * den <= num * num * r * r) continue;

    LongEdge edge;
    edge.a = a;
    edge.b = b;
    int moving = -1;
    bool on_axis = true;
    for (std::size_t i = 0; i < a.size() && on_axis; ++i) {
      if (a[i] == 0 && b[i] == 0) continue;
      if (moving >= 0) on_axis = false;
      else moving = static_cast<int>(i);
    }
    if (on_axis && moving >= 0) {
      edge.axis = moving;
      if (edge.b[static_cast<std::size_t>(moving)] < edge.a[static_cast<std::size_t>(moving)])
        std::swap(edge.a, edge.b);
    } else if (edge.b < edge.a) {
      std::swap(edge.a, edge.b);
    }
    report.edges.push_back(std::move(edge));
  }
  std::sort(report.edges.begin(), report.edges.end(),
            [](const LongEdge& x, const LongEdge& y) {
              if ((x.axis < 0) != (y.axis < 0)) return y.axis < 0;
              if (x.axis != y.axis) return x.axis < y.axis;
              if (x.a != y.a) return x.a < y.a;
              return x.b < y.b;
            });
  return report;
}

LongEdgeReport family_long_edges(const FamilySpec& spec, const TrimmedPolytope& member) {
  const bool tight = 10 * spec.rho <= spec.r;
  LongEdgeReport report =
      long_edges(member.P_star, spec.r, tight ? Rational(9, 10) : Rational(7, 10));
  report.adjusted = !tight;

  require_invariant(report.edges.size() == static_cast<std::size_t>(spec.d),
                    "family_long_edges: expected " + std::to_string(spec.d) +
                        " long edges, found " + std::to_string(report.edges.size()));
  for (int k = 0; k < spec.d; ++k) {
    const LongEdge& edge = report.edges[static_cast<std::size_t>(k)];
    require_invariant(edge.axis == k, "family_long_edges: long edge " +
                                          std::to_string(k) + " is not on axis " +
                                          std::to_string(k));
    const Int alpha = edge.a[static_cast<std::size_t>(k)];
    const Int tip = edge.b[static_cast<std::size_t>(k)];
    const Int want_tip = member.marked ? spec.r - (k + 1) : spec.r;
    require_invariant(alpha >= 0 && alpha <= spec.rho,
                      "family_long_edges: axis " + std::to_string(k) +
                          " starts at " + alpha.str() + ", beyond the corner scale");
    require_invariant(tip == want_tip, "family_long_edges: axis " + std::to_string(k) +
                                           " ends at " + tip.str() + " instead of " +
                                           want_tip.str());
  }
  return report;
}

CensusReport census(const FamilySpec& spec, std::uint64_t budget, bool marked,
                    std::uint64_t sample, std::uint64_t seed) {
  CensusReport report;
  report.d = spec.d;
  report.r = spec.r;
  report.marked = marked;
  report.x_size = spec.X.size();
  report.v_target = marked ? spec.v_target_marked : spec.v_target;

  const std::size_t x = spec.X.size();
  const bool exhaustive_fits = x < 64 && (std::uint64_t{1} << x) <= budget;
  if (x < 64 && sample >= (std::uint64_t{1} << x)) sample = 0;  // nothing left to skip
  if (sample == 0 && !exhaustive_fits)
    throw ResourceError("census: 2^" + std::to_string(x) +
                        " subsets exceed the budget of " + std::to_string(budget) +
                        "; request a sample instead");

  std::map<std::vector<LatticeVector>, std::uint64_t> classes;
  auto process = [&](const std::vector<std::uint32_t>& idx) {
    std::vector<LatticeVector> Z;
    Z.reserve(idx.size());
    Int mask = 0;
    for (std::uint32_t k : idx) {
      Z.push_back(spec.X[k]);
      mask |= Int(1) << k;
    }
    TrimmedPolytope member = marked ? marker_variant(spec, Z) : trim_to_volume(spec, Z);
    const std::uint64_t hits = ++classes[member.canonical];

    CensusRow row;
    row.mask = mask;
    row.m = member.m_Z;
    row.f0 = Int(member.P_star.vertices.size());
    row.fresh = hits == 1;
    report.rows.push_back(std::move(row));
  };

  if (sample == 0) {
    const std::uint64_t total = std::uint64_t{1} << x;
    report.rows.reserve(total);
    std::vector<std::uint32_t> idx;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      idx.clear();
      for (std::size_t k = 0; k < x; ++k)
        if (mask >> k & 1u) idx.push_back(static_cast<std::uint32_t>(k));
      process(idx);
    }
  } else {
    std::mt19937_64 gen(seed);
    std::set<std::vector<std::uint32_t>> seen;
    while (seen.size() < sample) {
      std::vector<std::uint32_t> idx;
      std::uint64_t word = 0;
      for (std::size_t k = 0; k < x; ++k) {
        if (k % 64 == 0) word = gen();
        if (word >> (k % 64) & 1u) idx.push_back(static_cast<std::uint32_t>(k));
      }
      seen.insert(std::move(idx));
    }
    report.rows.reserve(sample);
    for (const auto& idx : seen) process(idx);
    report.sampled = true;
  }

  report.generated = report.rows.size();
  report.distinct = classes.size();
  for (const auto& [form, count] : classes)
    if (count > report.max_class) report.max_class = count;

  const Int dfact = factorial(static_cast<unsigned>(spec.d));
  require_invariant(Int(report.max_class) <= dfact,
                    "census: a canonical class holds " + std::to_string(report.max_class) +
                        " members, more than d! = " + dfact.str());
  require_invariant(Int(report.distinct) * dfact >= Int(report.generated),
                    "census: distinct classes undershoot generated/d!");
  if (marked)
    require_invariant(report.distinct == report.generated,
                      "census: marked members must all be distinct, got " +
                          std::to_string(report.distinct) + " of " +
                          std::to_string(report.generated));

  report.ratio = report.generated == 0
                     ? 0.0
                     : static_cast<double>(report.distinct) /
                           static_cast<double>(report.generated);
  const double log_n = static_cast<double>(x) * std::log(2.0) -
                       std::log(dfact.convert_to<double>());
  const double log_v = std::log(report.v_target.convert_to<double>() /
                                dfact.convert_to<double>());
  report.implied_exponent = (log_n > 1.0 && log_v > 0.0) ? std::log(log_n) / log_v : 0.0;
  return report;
}

}  // namespace latticeforge
