#pragma once

#include <vector>

#include "aszeta/gf2m.hpp"

namespace aszeta {

// Dense polynomial over F_{2^m}, coefficients LSB-first, one word per
// coefficient.  Normalized: no trailing zero coefficients (zero poly has an
// empty vector).  The field is held by non-owning pointer; fields outlive
// every polynomial built over them.
struct PolyGf2m {
    const Gf2m* k = nullptr;
    std::vector<u64> c;

    PolyGf2m() = default;
    PolyGf2m(const Gf2m& field, std::vector<u64> coeffs);

    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    u64 coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    u64 lead() const { return c.back(); }
    void normalize();

    bool operator==(const PolyGf2m& o) const { return c == o.c; }
};

PolyGf2m poly_zero(const Gf2m& k);
PolyGf2m poly_const(const Gf2m& k, u64 a);
PolyGf2m poly_x(const Gf2m& k);

PolyGf2m poly_add(const PolyGf2m& a, const PolyGf2m& b);
PolyGf2m poly_mul(const PolyGf2m& a, const PolyGf2m& b);
PolyGf2m poly_sqr(const PolyGf2m& a);
PolyGf2m poly_rem(PolyGf2m a, const PolyGf2m& mod);
PolyGf2m poly_make_monic(PolyGf2m a);
PolyGf2m poly_gcd(PolyGf2m a, PolyGf2m b); // monic

// t^{2^e} mod `mod`, by e squarings.
PolyGf2m poly_pow2_mod(PolyGf2m t, unsigned e, const PolyGf2m& mod);

// Irreducibility of a monic polynomial over F_{2^m}, by the gcd sieve
// against x^{q^k} - x for k up to deg/2 (q = 2^m).
bool poly_irreducible(const PolyGf2m& p);

// Smallest monic irreducible of degree n over the field, by ascending
// encoding of the coefficient vector (radix 2^m, constant coefficient
// least significant) among candidates with nonzero constant term.
std::vector<u64> smallest_irreducible(const Gf2m& k, unsigned n);

} // namespace aszeta
