#pragma once

#include "supersym/rational.hpp"

#include <optional>
#include <vector>

namespace supersym {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major

RatMatrix rat_identity(std::size_t n);
RatMatrix rat_multiply(const RatMatrix& a, const RatMatrix& b);

// Exact inverse; throws DivisionByZero when singular.
RatMatrix rat_inverse(const RatMatrix& a);

// One solution of A x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b);

// Basis of {x : A x = 0}. Rows are scaled to integers and reduced by
// fraction-free (Bareiss) elimination with the first nonzero entry of each
// column as pivot; each basis vector has a 1 at its free column and 0 at the
// other free columns.
std::vector<RatVector> rat_null_space(const RatMatrix& a, std::size_t ncols);

std::size_t rat_rank(const RatMatrix& a, std::size_t ncols);

}  // namespace supersym
