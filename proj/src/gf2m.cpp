#include "aszeta/gf2m.hpp"

#include <utility>

#include "aszeta/check.hpp"

namespace aszeta {

int gf2x_degree(u64 p) {
    return p ? 63 - __builtin_clzll(p) : -1;
}

u64 gf2x_mulmod(u64 a, u64 b, u64 mod) {
    const int dm = gf2x_degree(mod);
    ASZ_CHECK(dm >= 1);
    unsigned __int128 acc = 0;
    for (int i = gf2x_degree(b); i >= 0; --i)
        if ((b >> i) & 1) acc ^= (unsigned __int128)a << i;
    for (int i = 126; i >= dm; --i)
        if ((acc >> i) & 1) acc ^= (unsigned __int128)mod << (i - dm);
    return (u64)acc;
}

u64 gf2x_gcd(u64 a, u64 b) {
    while (b) {
        int da = gf2x_degree(a), db = gf2x_degree(b);
        while (da >= db) {
            a ^= b << (da - db);
            da = gf2x_degree(a);
            if (a == 0) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool gf2x_irreducible(u64 p) {
    const int d = gf2x_degree(p);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((p & 1) == 0) return false; // divisible by x
    // No irreducible factor of degree <= d/2 iff irreducible.
    u64 t = 2; // the polynomial x
    for (int k = 1; 2 * k <= d; ++k) {
        t = gf2x_mulmod(t, t, p); // x^{2^k} mod p
        if (gf2x_gcd(t ^ 2, p) != 1) return false;
    }
    return true;
}

u64 gf2x_smallest_irreducible(unsigned deg) {
    ASZ_CHECK(deg >= 1 && deg <= 63);
    for (u64 c = (u64(1) << deg) | 1;; c += 2)
        if (gf2x_irreducible(c)) return c;
}

namespace {
u64 checked_default_modulus(unsigned m) {
    if (m < 1 || m > 63) throw input_error("base field degree must be between 1 and 63");
    return gf2x_smallest_irreducible(m);
}
} // namespace

Gf2m::Gf2m(unsigned m) : Gf2m(m, checked_default_modulus(m)) {}

Gf2m::Gf2m(unsigned m, u64 modulus) : m_(m), mod_(modulus) {
    if (m < 1 || m > 63)
        throw input_error("base field degree must be between 1 and 63");
    if (gf2x_degree(modulus) != (int)m)
        throw input_error("base field modulus does not have the declared degree");
    if (!gf2x_irreducible(modulus))
        throw input_error("base field modulus is reducible");
    mask_ = (m == 63) ? ~u64(0) >> 1 : (u64(1) << m) - 1;
    trace_mask_ = 0;
    for (unsigned t = 0; t < m_; ++t) {
        u64 s = u64(1) << t, acc = s;
        for (unsigned i = 1; i < m_; ++i) {
            s = sqr(s);
            acc ^= s;
        }
        ASZ_CHECK_MSG(acc <= 1, "trace of a basis element must lie in F_2");
        trace_mask_ |= acc << t;
    }
}

u64 Gf2m::pow(u64 a, unsigned long long e) const {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Gf2m::inv(u64 a) const {
    ASZ_CHECK_MSG(a != 0, "inverse of zero");
    if (m_ == 1) return 1;
    return pow(a, (u64(1) << m_) - 2);
}

u64 Gf2m::frobenius(u64 a, unsigned k) const {
    for (unsigned i = 0; i < k; ++i) a = sqr(a);
    return a;
}

} // namespace aszeta
