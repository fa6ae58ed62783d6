#pragma once

#include <optional>
#include <vector>

#include "latticeforge/vec.hpp"

namespace latticeforge {

using IntMatrix = std::vector<std::vector<Int>>;

// Exact determinant via fraction-free (Bareiss) elimination.
Int determinant(IntMatrix m);

// Rank over the rationals, computed with integer row operations.
int matrix_rank(IntMatrix m);

// Integer vector orthogonal to the span of rows (rows.size() == d-1 vectors in
// dimension d), i.e. the generalized cross product with cofactor signs.
// All-zero result means the rows are linearly dependent.
LatticeVector orthogonal_vector(const std::vector<LatticeVector>& rows);

// Solves basis * c = target exactly over the rationals, where basis columns are
// the given vectors. Returns nullopt when no solution exists. Basis vectors
// must be linearly independent.
std::optional<std::vector<Rational>> solve_rational(const std::vector<LatticeVector>& basis,
                                                    const LatticeVector& target);

// Divides out the gcd content of v (in place); zero vectors stay zero.
void make_primitive(LatticeVector& v, Int* content = nullptr);

}  // namespace latticeforge
