#include "latticeforge/polytope.hpp"

#include "latticeforge/errors.hpp"
#include "latticeforge/hull.hpp"

namespace latticeforge {

bool ConvexLatticePolytope::contains(const LatticeVector& p) const {
  require_domain(static_cast<int>(p.size()) == d, "contains: point dimension mismatch");
  if (empty()) return false;
  if (full_dimensional()) {
    for (const Facet& f : facets)
      if (dot(f.normal, p) > f.offset) return false;
    return true;
  }
  if (dim == 0) return p == vertices.front();
  // Degenerate: check membership in the affine hull, then recurse on the
  // projected (full-dimensional) hull of the vertices. These polytopes are
  // small in every use, so recomputing the projection is fine.
  const LatticeVector& anchor = vertices.front();
  auto coords = solve_rational(affine_basis, p - anchor);
  if (!coords) return false;
  // Projected membership with rational coordinates: scale by the common
  // denominator so both the query and the re-projected vertices are integral.
  Int den = 1;
  for (const Rational& c : *coords) den = boost::multiprecision::lcm(den, Int(boost::multiprecision::denominator(c)));
  LatticeVector q(coords->size());
  for (std::size_t i = 0; i < coords->size(); ++i)
    q[i] = Int(boost::multiprecision::numerator((*coords)[i])) *
           (den / Int(boost::multiprecision::denominator((*coords)[i])));
  std::vector<LatticeVector> proj;
  proj.reserve(vertices.size());
  for (const LatticeVector& v : vertices) {
    auto c = solve_rational(affine_basis, v - anchor);
    require_invariant(c.has_value(), "degenerate polytope vertex outside its own affine hull");
    LatticeVector w(c->size());
    for (std::size_t i = 0; i < c->size(); ++i) {
      Rational scaled = (*c)[i] * den;
      require_invariant(boost::multiprecision::denominator(scaled) == 1,
                        "projected vertex is not integral at the common denominator");
      w[i] = Int(boost::multiprecision::numerator(scaled));
    }
    proj.push_back(std::move(w));
  }
  return convex_hull(proj, dim).contains(q);
}

}  // namespace latticeforge
