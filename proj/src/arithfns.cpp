#include "aszeta/arithfns.hpp"

#include <numeric>

#include "aszeta/check.hpp"

namespace aszeta {

int moebius(long n) {
    ASZ_CHECK(n >= 1);
    int r = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    if (n > 1) r = -r;
    return r;
}

long totient(long n) {
    ASZ_CHECK(n >= 1);
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<long> divisors(long n) {
    ASZ_CHECK(n >= 1);
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

int v2(long n) {
    ASZ_CHECK(n >= 1);
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

long odd_part(long n) {
    ASZ_CHECK(n >= 1);
    while (n % 2 == 0) n /= 2;
    return n;
}

int chi8(long n) {
    ASZ_CHECK_MSG(n % 2 != 0, "character mod 8 is defined on odd arguments");
    const long r = ((n % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
}

long ramanujan(long ell, long n) {
    ASZ_CHECK(ell >= 1 && n >= 1);
    const long g = std::gcd(ell, n);
    const long q = ell / g;
    const int mu = moebius(q);
    if (mu == 0) return 0;
    const long num = totient(ell), den = totient(q);
    ASZ_CHECK(num % den == 0);
    return mu * (num / den);
}

ZSqrt2 sigma_sum(long ell, long n) {
    ASZ_CHECK_MSG(ell % 8 == 0, "the twisted sum is defined for indices divisible by 8");
    ASZ_CHECK(n >= 1);
    const int k = v2(ell);
    const long ellp = odd_part(ell);
    if (v2(n) != k - 3) return ZSqrt2();
    const long np = n >> (k - 3);
    const mpz_class scale = mpz_class(1) << (k - 2);
    return ZSqrt2(0, scale * (chi8(ellp) * chi8(np)) * ramanujan(ellp, np));
}

size_t DivisorMatrix::index_of(long d) const {
    for (size_t i = 0; i < divs.size(); ++i)
        if (divs[i] == d) return i;
    check_fail("divisor present in index", __FILE__, __LINE__, std::to_string(d));
}

DivisorMatrix matrix_A(long n) {
    DivisorMatrix A;
    A.n = n;
    A.divs = divisors(n);
    const size_t k = A.divs.size();
    A.e.assign(k * k, mpz_class(0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            A.at(i, j) = ramanujan(A.divs[j], A.divs[i]);
    return A;
}

std::vector<int> matrix_delta(long n) {
    ASZ_CHECK_MSG(n % 2 != 0, "sign diagonal is indexed by divisors of an odd number");
    std::vector<int> d;
    for (long dv : divisors(n)) d.push_back(chi8(dv));
    return d;
}

} // namespace aszeta
