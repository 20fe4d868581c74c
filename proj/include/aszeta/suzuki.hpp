#pragma once

#include <gmpxx.h>

#include "aszeta/lfun.hpp"

namespace aszeta {

// The one-parameter family of curves y^2 + y = x^{q0}(x^q + x) over F_2 with
// q0 = 2^h and q = 2^{2h+1}, whose smooth models carry an action of the
// Suzuki group Sz(q).  Everything about them reduces to closed forms in h,
// which makes the family the sharpest external check on the generic
// machinery: the right-hand side is an additive polynomial x^{2q0} + x^{q0},
// so the same data also flows through the full pipeline.

// The additive-polynomial description: m = 1, R = x^{2^{h+1}} + x^{2^h}.
CurveSpec suzuki_curve_spec(unsigned h);

// Splitting degree of the kernel polynomial: 4h + 2.
unsigned suzuki_splitting_degree(unsigned h);

// Radical dimension at degree n: gcd(n, 2h+1), plus one when n is even.
unsigned suzuki_c(unsigned h, unsigned long n);

// Sign of the exponential sum at degree n, by the closed form: for odd n it
// is chi(n * gcd(n, 2h+1)); it vanishes at 2-valuation 1, equals
// chi((2h+1) gcd(n, 2h+1)) at valuation 2, and its negative beyond.
int suzuki_epsilon(unsigned h, unsigned long n);

// S_n = eps_n 2^{(n + c_n)/2} exactly.
mpz_class suzuki_sum(unsigned h, unsigned long n);

// Points of the smooth model over F_{2^n}:
//   2^n + 1 + (2^{gcd(n, 2h+1)} - 1) S_n.
mpz_class suzuki_curve_count(unsigned h, unsigned long n);

// The same count by brute force: every pair (x, y) in F_{2^n}^2 is tested
// against y^q + y = x^{q0}(x^q + x) with plain field exponentiation, plus
// the point at infinity.  No additive-polynomial or trace machinery at all.
mpz_class suzuki_count_exhaustive(unsigned h, unsigned n);

} // namespace aszeta
