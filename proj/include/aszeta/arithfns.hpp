#pragma once

#include <vector>

#include <gmpxx.h>

#include "aszeta/zsqrt2.hpp"

namespace aszeta {

int moebius(long n);
long totient(long n);
std::vector<long> divisors(long n); // ascending
int v2(long n);
long odd_part(long n);

// The real character mod 8: +1 on ±1, -1 on ±3; defined on odd arguments.
int chi8(long n);

// Ramanujan sum c_ell(n) = sum over units i mod ell of zeta_ell^{in}, by the
// closed form mu(ell/g) phi(ell) / phi(ell/g) with g = gcd(ell, n).
long ramanujan(long ell, long n);

// Twisted sum sigma_ell(n) = sum over units i mod ell of chi(i) zeta_ell^{in}
// for 8 | ell.  Writing ell = 2^k ell' with ell' odd: zero unless
// v2(n) = k - 3, and otherwise chi(ell' n') 2^{k-2} sqrt(2) c_{ell'}(n')
// where n = 2^{k-3} n' with n' odd.
ZSqrt2 sigma_sum(long ell, long n);

// Square matrix indexed by the ascending divisors of n.
struct DivisorMatrix {
    long n = 0;
    std::vector<long> divs;
    std::vector<mpz_class> e; // row-major

    size_t dim() const { return divs.size(); }
    mpz_class& at(size_t i, size_t j) { return e[i * dim() + j]; }
    const mpz_class& at(size_t i, size_t j) const { return e[i * dim() + j]; }
    size_t index_of(long d) const; // position of a divisor
};

// A(n): rows indexed by divisors d, columns by divisors ell, entry c_ell(d).
DivisorMatrix matrix_A(long n);

// For odd n: the diagonal signs chi(ell) for ell | n.
std::vector<int> matrix_delta(long n);

} // namespace aszeta
