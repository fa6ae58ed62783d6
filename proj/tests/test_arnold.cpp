#include "latticeforge/arnold.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "latticeforge/errors.hpp"
#include "latticeforge/hull.hpp"
#include "latticeforge/polytope_ops.hpp"

using namespace latticeforge;

namespace {

LatticeVector pt2(Int a, Int b) { return LatticeVector{std::move(a), std::move(b)}; }

LatticeVector swap_axes(const LatticeVector& p) { return pt2(p[1], p[0]); }

ConvexLatticePolytope swap_axes(const ConvexLatticePolytope& P) {
  std::vector<LatticeVector> moved;
  moved.reserve(P.vertices.size());
  for (const auto& v : P.vertices) moved.push_back(swap_axes(v));
  return convex_hull(moved, P.d);
}

}  // namespace

TEST_CASE("corner scale selection and infeasible radii") {
  CHECK_THROWS_WITH_AS((void)base_family(2, 20), doctest::Contains("cap r/4 = 5"),
                       DomainError);
  CHECK_THROWS_WITH_AS((void)base_family(2, 20), doctest::Contains("largest trim 6"),
                       DomainError);
  CHECK_THROWS_AS((void)base_family(2, 49), DomainError);
  CHECK_THROWS_AS((void)base_family(4, 100), DomainError);
  CHECK_THROWS_AS((void)base_family(2, 1), DomainError);

  CHECK(first_feasible_radius(2, 36, 60) == 48);
  CHECK(first_feasible_radius(2, 100, 160) == 100);
  CHECK_THROWS_AS((void)first_feasible_radius(2, 20, 35), DomainError);
}

TEST_CASE("family data at the smallest workable radius") {
  FamilySpec spec = base_family(2, 48);
  CHECK(spec.d == 2);
  CHECK(spec.rho == 12);
  CHECK(spec.X.size() == 10);
  CHECK(spec.v_empty == 3581);
  CHECK(spec.v_target == 3567);
  CHECK(spec.V_target == Rational(3567, 2));
  CHECK(spec.m_max == 14);
  CHECK(spec.v_target_marked == 3550);
  CHECK(spec.m_max_marked == 12);

  CHECK(std::is_sorted(spec.X.begin(), spec.X.end()));
  for (const auto& x : spec.X) {
    CHECK(x[0] > 0);
    CHECK(x[1] > 0);
  }
  // the first axis keeps one marker, the second its last two points
  std::vector<LatticeVector> markers{pt2(0, 47), pt2(0, 48), pt2(48, 0)};
  CHECK(spec.markers == markers);
}

TEST_CASE("subset hulls shrink monotonically towards the target") {
  FamilySpec spec = base_family(2, 48);

  CHECK(subset_hull(spec, {}).normalized_volume == spec.v_empty);
  CHECK(subset_hull(spec, spec.X).normalized_volume == spec.v_target);

  for (const auto& x : spec.X) {
    const Int v = subset_hull(spec, {x}).normalized_volume;
    CHECK(v < spec.v_empty);  // every positive vertex supports the hull
    CHECK(v >= spec.v_target);
  }

  std::vector<LatticeVector> chain;
  Int last = spec.v_empty;
  for (const auto& x : spec.X) {
    chain.push_back(x);
    const Int v = subset_hull(spec, chain).normalized_volume;
    CHECK(v <= last);
    last = v;
  }
  CHECK(last == spec.v_target);

  CHECK_THROWS_AS((void)subset_hull(spec, {pt2(1, 1)}), DomainError);
  CHECK_THROWS_AS((void)trim_to_volume(spec, {pt2(0, 48)}), DomainError);
}

TEST_CASE("trims hit the shared volume and keep two long axis edges") {
  FamilySpec spec = base_family(2, 48);

  TrimmedPolytope full = trim_to_volume(spec, {});
  CHECK(full.m_Z == spec.m_max);
  CHECK(full.P_star.normalized_volume == spec.v_target);
  CHECK(full.P_star.vertices.size() == 15);

  LongEdgeReport edges = family_long_edges(spec, full);
  CHECK(edges.adjusted);  // rho = 12 exceeds r/10
  CHECK(edges.fraction == Rational(7, 10));
  REQUIRE(edges.edges.size() == 2);
  CHECK(edges.edges[0].a == pt2(10, 0));
  CHECK(edges.edges[0].b == pt2(48, 0));
  CHECK(edges.edges[1].a == pt2(0, 4));
  CHECK(edges.edges[1].b == pt2(0, 48));

  // removing every positive vertex needs no corner rewrite at all
  TrimmedPolytope bare = trim_to_volume(spec, spec.X);
  CHECK(bare.m_Z == 0);
  CHECK(bare.P_star == subset_hull(spec, spec.X));
  LongEdgeReport bare_edges = family_long_edges(spec, bare);
  CHECK(bare_edges.edges[0].a == pt2(0, 0));
  CHECK(bare_edges.edges[1].b == pt2(0, 48));
}

TEST_CASE("corner simplex control shows three long edges") {
  std::vector<LatticeVector> v{pt2(0, 0), pt2(100, 0), pt2(0, 100)};
  LongEdgeReport report = long_edges(convex_hull(v, 2), 100);
  CHECK(report.fraction == Rational(9, 10));
  CHECK(report.edges.size() == 3);
  int on_axis = 0;
  for (const auto& e : report.edges) on_axis += e.axis >= 0;
  CHECK(on_axis == 2);  // the hypotenuse is long but not axis-collinear
}

TEST_CASE("markers clip the axis tips and break the mirror symmetry") {
  FamilySpec spec = base_family(2, 48);

  TrimmedPolytope marked = marker_variant(spec, {});
  CHECK(marked.marked);
  CHECK(marked.m_Z == spec.m_max_marked);
  CHECK(marked.v_target == spec.v_target_marked);
  CHECK(marked.P_star.normalized_volume == 3550);
  CHECK(marked.removed.size() == 3);

  LongEdgeReport edges = family_long_edges(spec, marked);
  REQUIRE(edges.edges.size() == 2);
  CHECK(edges.edges[0].a == pt2(12, 0));
  CHECK(edges.edges[0].b == pt2(47, 0));  // one marker gone from the first axis
  CHECK(edges.edges[1].a == pt2(0, 1));
  CHECK(edges.edges[1].b == pt2(0, 46));  // two markers gone from the second

  CHECK(marker_variant(spec, spec.X).m_Z == 0);
  CHECK(marked.canonical != trim_to_volume(spec, {}).canonical);

  // mirroring a subset mirrors its hull
  const LatticeVector x = spec.X.front();
  REQUIRE(std::binary_search(spec.X.begin(), spec.X.end(), swap_axes(x)));
  CHECK(subset_hull(spec, {swap_axes(x)}) == swap_axes(subset_hull(spec, {x})));

  // find an unmarked collision: it is a mirror pair, and markers separate it
  std::map<std::vector<LatticeVector>, std::vector<LatticeVector>> first_of;
  std::vector<LatticeVector> za, zb;
  for (std::uint64_t mask = 0; mask < (1u << spec.X.size()) && zb.empty(); ++mask) {
    std::vector<LatticeVector> Z;
    for (std::size_t k = 0; k < spec.X.size(); ++k)
      if (mask >> k & 1u) Z.push_back(spec.X[k]);
    auto member = trim_to_volume(spec, Z);
    auto [it, fresh] = first_of.try_emplace(member.canonical, Z);
    if (!fresh) {
      za = it->second;
      zb = Z;
    }
  }
  REQUIRE_FALSE(zb.empty());
  std::vector<LatticeVector> mirrored;
  for (const auto& p : za) mirrored.push_back(swap_axes(p));
  std::sort(mirrored.begin(), mirrored.end());
  CHECK(mirrored == zb);
  TrimmedPolytope a = marker_variant(spec, za);
  TrimmedPolytope b = marker_variant(spec, zb);
  CHECK(a.canonical != b.canonical);

  // swapping axes by hand only reproduces the member's own class
  ConvexLatticePolytope swapped = swap_axes(a.P_star);
  CHECK(canonical_form(swapped) == a.canonical);
  CHECK(swapped.vertices != b.P_star.vertices);
}

TEST_CASE("full census counts classes and markers make them all distinct") {
  FamilySpec spec = base_family(2, 48);

  CensusReport plain = census(spec);
  CHECK(plain.generated == 1024);
  CHECK(plain.distinct == 1021);  // three mirror-symmetric pairs collapse
  CHECK(plain.max_class == 2);
  CHECK_FALSE(plain.sampled);
  CHECK(plain.v_target == spec.v_target);
  CHECK(plain.rows.size() == 1024);
  CHECK(plain.rows[0].mask == 0);
  CHECK(plain.rows[0].m == spec.m_max);
  std::size_t fresh = 0;
  for (const auto& row : plain.rows) fresh += row.fresh ? 1 : 0;
  CHECK(fresh == plain.distinct);

  CensusReport marked = census(spec, 1u << 20, true);
  CHECK(marked.generated == 1024);
  CHECK(marked.distinct == 1024);
  CHECK(marked.max_class == 1);
  CHECK(marked.v_target == spec.v_target_marked);

  CHECK_THROWS_WITH_AS((void)census(spec, 100), doctest::Contains("sample"),
                       ResourceError);

  CensusReport sampled = census(spec, 1u << 20, false, 50, 3);
  CHECK(sampled.sampled);
  CHECK(sampled.generated == 50);
  CensusReport again = census(spec, 1u << 20, false, 50, 3);
  CHECK(again.rows.size() == sampled.rows.size());
  for (std::size_t i = 0; i < again.rows.size(); ++i) {
    CHECK(again.rows[i].mask == sampled.rows[i].mask);
    CHECK(again.rows[i].m == sampled.rows[i].m);
  }

  // asking for more samples than subsets falls back to the full sweep
  CensusReport all = census(spec, 1u << 20, false, 5000, 3);
  CHECK_FALSE(all.sampled);
  CHECK(all.generated == 1024);
}

TEST_CASE("random subsets at the hundred radius trim exactly") {
  FamilySpec spec = base_family(2, 100);
  CHECK(spec.rho == 14);
  CHECK(spec.X.size() == 16);
  CHECK(spec.v_empty == 15665);
  CHECK(spec.v_target == 15639);
  CHECK(spec.m_max == 26);
  CHECK(spec.v_target_marked == 15612);
  CHECK(spec.m_max_marked == 24);

  CensusReport sampled = census(spec, 1u << 20, false, 200, 11);
  CHECK(sampled.generated == 200);
  CHECK(sampled.max_class <= 2);
  CHECK(Int(2) * Int(sampled.distinct) >= Int(sampled.generated));

  CensusReport marked = census(spec, 1u << 20, true, 200, 11);
  CHECK(marked.distinct == 200);

  LongEdgeReport edges = family_long_edges(spec, marker_variant(spec, {}));
  REQUIRE(edges.edges.size() == 2);
  CHECK(edges.edges[0].b == pt2(99, 0));
  CHECK(edges.edges[1].b == pt2(0, 98));
}

TEST_CASE("three-dimensional desk instance") {
  CHECK_THROWS_AS((void)base_family(3, 296), DomainError);

  FamilySpec spec = base_family(3, 300);
  CHECK(spec.rho == 75);
  CHECK(spec.X.size() == 3717);
  CHECK(spec.v_empty == 84773775);
  CHECK(spec.v_target == 84754425);
  CHECK(spec.m_max == 19350);
  CHECK(spec.v_target_marked == 84751686);
  CHECK(spec.m_max_marked == 19326);
  CHECK(spec.markers.size() == 6);

  TrimmedPolytope full = trim_to_volume(spec, {});
  CHECK(full.m_Z == 19350);
  CHECK(full.P_star.normalized_volume == spec.v_target);
  CHECK(full.P_star.vertices.size() == 3831);
  LongEdgeReport edges = family_long_edges(spec, full);
  CHECK(edges.adjusted);
  REQUIRE(edges.edges.size() == 3);
  for (int k = 0; k < 3; ++k)
    CHECK(edges.edges[static_cast<std::size_t>(k)].b[static_cast<std::size_t>(k)] == 300);

  TrimmedPolytope marked = marker_variant(spec, {spec.X[100], spec.X[2000]});
  CHECK(marked.m_Z == 19318);
  CHECK(marked.removed.size() == 8);
  LongEdgeReport clipped = family_long_edges(spec, marked);
  REQUIRE(clipped.edges.size() == 3);
  CHECK(clipped.edges[0].b[0] == 299);
  CHECK(clipped.edges[1].b[1] == 298);
  CHECK(clipped.edges[2].b[2] == 297);

  CensusReport sampled = census(spec, 1u << 20, false, 3, 7);
  CHECK(sampled.sampled);
  CHECK(sampled.generated == 3);
  CHECK(sampled.distinct == 3);
  CHECK(sampled.implied_exponent > 0.45);
  CHECK(sampled.implied_exponent < 0.50);
}
