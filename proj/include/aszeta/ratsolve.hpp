#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace aszeta {

// Exact dense linear algebra over Q.  The systems handled here are small
// (order = number of divisors of a splitting degree), so plain Gaussian
// elimination on rationals is the right tool.

// Solve a*x = rhs for square row-major a.  A singular matrix is an internal
// failure: every system assembled by callers has unit-triangular-like
// structure with known nonzero determinant.
std::vector<mpq_class> rat_solve(size_t n, std::vector<mpq_class> a,
                                 std::vector<mpq_class> rhs);

mpq_class rat_det(size_t n, std::vector<mpq_class> a);

} // namespace aszeta
