#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace aszeta {

// Exact element a + b*sqrt(2) of Z[sqrt(2)].
struct ZSqrt2 {
    mpz_class a, b;

    ZSqrt2() : a(0), b(0) {}
    ZSqrt2(mpz_class ia) : a(std::move(ia)), b(0) {}
    ZSqrt2(long ia) : a(ia), b(0) {}
    ZSqrt2(mpz_class ia, mpz_class ib) : a(std::move(ia)), b(std::move(ib)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_integer() const { return b == 0; }

    ZSqrt2 conj() const { return {a, -b}; }
    ZSqrt2 times_sqrt2() const { return {2 * b, a}; }

    // sqrt(2)^k
    static ZSqrt2 sqrt2_pow(unsigned long k);

    ZSqrt2 operator+(const ZSqrt2& o) const { return {a + o.a, b + o.b}; }
    ZSqrt2 operator-(const ZSqrt2& o) const { return {a - o.a, b - o.b}; }
    ZSqrt2 operator-() const { return {-a, -b}; }
    ZSqrt2 operator*(const ZSqrt2& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    bool operator==(const ZSqrt2& o) const { return a == o.a && b == o.b; }

    std::string str() const; // "a" when integral, else "a+b*sqrt2" form
};

// Polynomial over Z[sqrt(2)], ascending coefficients, trailing zeros trimmed.
struct PolyZSqrt2 {
    std::vector<ZSqrt2> c;

    PolyZSqrt2() = default;
    explicit PolyZSqrt2(std::vector<ZSqrt2> coeffs) : c(std::move(coeffs)) { trim(); }
    static PolyZSqrt2 one() { return PolyZSqrt2({ZSqrt2(1)}); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int deg() const { return (int)c.size() - 1; }
    ZSqrt2 coeff(size_t i) const { return i < c.size() ? c[i] : ZSqrt2(); }

    PolyZSqrt2 operator*(const PolyZSqrt2& o) const;
    PolyZSqrt2 conj() const;
    bool operator==(const PolyZSqrt2& o) const { return c == o.c; }

    // All coefficients integral?
    bool is_integer() const;
};

// Monic cyclotomic polynomial of index ell, ascending integer coefficients.
std::vector<mpz_class> cyclo(long ell);

// prod over primitive ell-th roots of unity zeta of (1 - zeta*T): the
// coefficient-reversed cyclotomic polynomial.
std::vector<mpz_class> cyclo_rev(long ell);

// Arithmetic in Z[y]/(Phi_ell(y)), used to expand products of linear factors
// 1 - y^i T exactly.  Elements are integer coordinate vectors on the power
// basis 1, y, ..., y^{phi(ell)-1}.
class CycloRing {
  public:
    explicit CycloRing(long ell);

    long ell() const { return ell_; }
    size_t dim() const { return dim_; }

    using Elem = std::vector<mpz_class>;
    Elem zero() const { return Elem(dim_, mpz_class(0)); }
    Elem from_int(const mpz_class& v) const;
    const Elem& y_pow(long e) const; // y^{e mod ell} reduced mod Phi_ell
    Elem add(const Elem& x, const Elem& y) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem mul_y_pow(const Elem& x, long e) const;

    // The image of sqrt(2) when 8 | ell: y^{ell/8} + y^{7 ell/8}.
    const Elem& sqrt2() const;

    // Express x as u + v*sqrt(2); failure means x is outside Z[sqrt(2)],
    // which callers treat as an internal error.
    bool to_zsqrt2(const Elem& x, ZSqrt2& out) const;

  private:
    long ell_;
    size_t dim_;
    std::vector<mpz_class> phi_;
    std::vector<Elem> ypow_; // y^e for e < 2*dim (reduced)
    Elem sqrt2_;
};

// For 8 | ell, the two halves of the reversed cyclotomic polynomial over
// Q(sqrt(2)): the first takes the primitive roots zeta^i with chi(i) = +1,
// the second those with chi(i) = -1 (chi the character mod 8 with
// chi(±1) = 1, chi(±3) = -1).  Their product is cyclo_rev(ell) and they are
// sqrt(2)-conjugates of each other; both facts are asserted.
std::pair<PolyZSqrt2, PolyZSqrt2> cyclo_split(long ell);

} // namespace aszeta
