#pragma once

#include <string>

#include "latticeforge/polytope.hpp"

namespace latticeforge {

// Interchange format for polytopes: one JSON object with fields `d` (an
// integer) and `vertices` (an array of d-length integer arrays in strictly
// increasing lexicographic order). Exact integers only, no floats; every
// coordinate must fit in a signed 64-bit word (DomainError otherwise —
// coordinates this artifact emits are radius-scale, far below that).

// Serializes the vertex set. Output is deterministic: the same polytope
// always produces identical bytes.
std::string polytope_to_text(const ConvexLatticePolytope& p);
void write_polytope(const ConvexLatticePolytope& p, const std::string& path);

// Parses and revalidates: the listed points must be exactly the extreme
// points of their own hull and already lexicographically sorted. Returns the
// rebuilt polytope (facets and volume recomputed from scratch).
ConvexLatticePolytope polytope_from_text(const std::string& text);
ConvexLatticePolytope read_polytope(const std::string& path);

}  // namespace latticeforge
