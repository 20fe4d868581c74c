#pragma once

#include <vector>

#include <gmpxx.h>

#include "aszeta/bitmat.hpp"
#include "aszeta/field_tower.hpp"
#include "aszeta/linearized.hpp"

namespace aszeta {

// The F_2-valued quadratic form q(x) = Tr(x R(x)) on an extension field,
// carried as its polarized bilinear form b(x, y) = q(x+y) + q(x) + q(y)
// together with the values of q on the packed coordinate basis.
struct QuadraticSpace {
    size_t dim = 0;
    BitMat gram;           // b(e_i, e_j); symmetric with zero diagonal
    std::vector<u64> diag; // q(e_j), packed
};

// Assemble the space for q on ctx, where R has coefficients in the base
// field of ctx.  Built as (trace gram) x (matrix of x -> R(x)) in O(d k^3/64)
// bit operations instead of k^2 field multiplications; the polarization
// identity itself serves as the small-size cross-check in the tests.
QuadraticSpace build_space(const FieldCtxPtr& ctx, const AdditivePoly& r);

struct FormClass {
    unsigned c = 0; // F_2-dimension of the radical of the bilinear form
    int eps = 0;    // sign of the exponential sum: -1, 0, or +1
    int arf = 0;    // Arf invariant of the nondegenerate quotient (eps != 0)
};

// Symplectic reduction: repeatedly split off a hyperbolic pair, updating the
// remaining basis and form values, until only the radical is left.  q is
// linear on the radical; eps = 0 exactly when it is nonzero there, and
// otherwise (-1)^{Arf}.
FormClass classify(const QuadraticSpace& s);

// sum over the space of (-1)^{q(x)} = eps * 2^{(dim + c)/2}.
mpz_class exp_sum(const FormClass& f, size_t dim);

} // namespace aszeta
