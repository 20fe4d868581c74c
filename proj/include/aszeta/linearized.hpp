#pragma once

#include <map>
#include <vector>

#include "aszeta/field_tower.hpp"
#include "aszeta/poly_gf2m.hpp"

namespace aszeta {

// An additive polynomial sum_{i=0}^{d} a_i x^{2^i} over F_{2^m}, a_d != 0.
struct AdditivePoly {
    const Gf2m* k = nullptr;
    std::vector<u64> a; // a[i] multiplies x^{2^i}

    AdditivePoly() = default;
    AdditivePoly(const Gf2m& field, std::vector<u64> coeffs);

    unsigned two_degree() const { return (unsigned)a.size() - 1; }
    u64 coeff(size_t i) const { return i < a.size() ? a[i] : 0; }
};

// Evaluate at an element of an extension of the same base field.
FieldElem additive_eval(const AdditivePoly& p, const FieldElem& x);
void additive_eval(const AdditivePoly& p, const FieldCtx& ctx, const u64* x, u64* out);

// Dense form, degree 2^{two_degree()}.
PolyGf2m to_ordinary(const AdditivePoly& p);

// The additive polynomial of 2-degree 2d
//   sum_{i=0}^{d} ( a_i^{2^d} x^{2^{d+i}} + a_i^{2^{d-i}} x^{2^{d-i}} )
// whose roots over F_{2^{mn}} span the radical of the bilinear form
// Tr(x R(y) + R(x) y).  Its coefficient of x is exactly a_d (the i = 0 pair
// cancels in characteristic 2), so it is separable.
AdditivePoly kernel_poly(const AdditivePoly& R);

// Least N >= 1 with x^{2^{mN}} ≡ x (mod kp): the degree over F_{2^m} of the
// splitting field of kp.
unsigned splitting_degree(const PolyGf2m& kp, unsigned m);

// log2 of deg gcd(kp, x^{2^{mn}} - x): the F_2-dimension of the part of the
// root space of kp defined over F_{2^{mn}}.  The gcd degree must be a power
// of two; anything else is an internal failure.
unsigned radical_dim(const AdditivePoly& R, unsigned m, unsigned n);

struct RadicalProfile {
    unsigned N = 0;      // splitting degree of the kernel polynomial
    unsigned a = 0;      // v2(N)
    unsigned N_odd = 0;  // odd part of N
    std::vector<long> divisors_2N;
    std::map<long, unsigned> c; // divisor of 2N -> radical dimension
};

// Splitting degree plus radical dimensions at every divisor of 2N, with the
// Frobenius powers x^{2^{mn}} mod kp cached across the divisors.
RadicalProfile radical_profile(const AdditivePoly& R, unsigned m);

} // namespace aszeta
