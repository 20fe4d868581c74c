#pragma once

#include <gmpxx.h>

#include "aszeta/field_tower.hpp"
#include "aszeta/linearized.hpp"

namespace aszeta {

// Exhaustive enumeration kernels.  They evaluate the curve data point by
// point with plain field arithmetic, independent of the bilinear-form and
// L-function machinery, and exist to cross-check it (and to answer small
// inputs directly from the CLI).  Cost is 2^{mn} field multiplications, or
// 4^{mn} for the pair count, so callers gate the field size.

// sum over x in ctx of (-1)^{Tr(x R(x))}.  Plain per-element evaluation;
// kept as the reference for the parallel kernel.
mpz_class brute_sum_serial(const FieldCtxPtr& ctx, const AdditivePoly& r);

// Same sum, OpenMP-parallel: the field is walked in Gray-code order per
// chunk so each step is one basis-vector update of x and of R(x) plus a
// single multiplication.
mpz_class brute_sum(const FieldCtxPtr& ctx, const AdditivePoly& r);

// Number of affine points of y^2 + y = x R(x) over ctx, counted by literally
// enumerating pairs (x, y).  Quadratic in the field size; the most naive
// cross-check of all.
mpz_class affine_pairs_serial(const FieldCtxPtr& ctx, const AdditivePoly& r);
mpz_class affine_pairs(const FieldCtxPtr& ctx, const AdditivePoly& r);

// The same affine count, still by exhausting every x and every y, but with
// the y side tabulated once: the multiset {y^2 + y} is sorted and each x
// contributes the number of table entries equal to x R(x).  Linearithmic in
// the field size, so it reaches fields the pair loop cannot.
mpz_class curve_solutions(const FieldCtxPtr& ctx, const AdditivePoly& r);

} // namespace aszeta
