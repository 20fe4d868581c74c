#include "aszeta/poly_gf2m.hpp"

#include <algorithm>

#include "aszeta/check.hpp"

namespace aszeta {

PolyGf2m::PolyGf2m(const Gf2m& field, std::vector<u64> coeffs)
    : k(&field), c(std::move(coeffs)) {
    for (u64 w : c) ASZ_CHECK((w & ~field.mask()) == 0);
    normalize();
}

void PolyGf2m::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyGf2m poly_zero(const Gf2m& k) { return PolyGf2m(k, {}); }

PolyGf2m poly_const(const Gf2m& k, u64 a) { return PolyGf2m(k, {a}); }

PolyGf2m poly_x(const Gf2m& k) { return PolyGf2m(k, {0, 1}); }

PolyGf2m poly_add(const PolyGf2m& a, const PolyGf2m& b) {
    ASZ_CHECK(a.k == b.k || *a.k == *b.k);
    std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] ^= a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] ^= b.c[i];
    return PolyGf2m(*a.k, std::move(c));
}

PolyGf2m poly_mul(const PolyGf2m& a, const PolyGf2m& b) {
    ASZ_CHECK(a.k == b.k || *a.k == *b.k);
    if (a.is_zero() || b.is_zero()) return poly_zero(*a.k);
    std::vector<u64> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] ^= a.k->mul(a.c[i], b.c[j]);
    }
    return PolyGf2m(*a.k, std::move(c));
}

PolyGf2m poly_sqr(const PolyGf2m& a) {
    if (a.is_zero()) return a;
    std::vector<u64> c(2 * a.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[2 * i] = a.k->sqr(a.c[i]);
    return PolyGf2m(*a.k, std::move(c));
}

PolyGf2m poly_rem(PolyGf2m a, const PolyGf2m& mod) {
    ASZ_CHECK(!mod.is_zero());
    const Gf2m& k = *mod.k;
    const u64 linv = k.inv(mod.lead());
    while (a.deg() >= mod.deg()) {
        const u64 q = k.mul(a.lead(), linv);
        const size_t shift = a.deg() - mod.deg();
        for (size_t i = 0; i < mod.c.size(); ++i)
            a.c[shift + i] ^= k.mul(q, mod.c[i]);
        a.normalize();
    }
    return a;
}

PolyGf2m poly_make_monic(PolyGf2m a) {
    if (a.is_zero() || a.lead() == 1) return a;
    const u64 linv = a.k->inv(a.lead());
    for (u64& w : a.c) w = a.k->mul(w, linv);
    return a;
}

PolyGf2m poly_gcd(PolyGf2m a, PolyGf2m b) {
    while (!b.is_zero()) {
        PolyGf2m r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(std::move(a));
}

PolyGf2m poly_pow2_mod(PolyGf2m t, unsigned e, const PolyGf2m& mod) {
    for (unsigned i = 0; i < e; ++i) t = poly_rem(poly_sqr(t), mod);
    return t;
}

bool poly_irreducible(const PolyGf2m& p) {
    const int d = p.deg();
    ASZ_CHECK(d >= 1 && p.lead() == 1);
    if (d == 1) return true;
    if (p.coeff(0) == 0) return false;
    const Gf2m& k = *p.k;
    PolyGf2m t = poly_x(k);
    for (int step = 1; 2 * step <= d; ++step) {
        t = poly_pow2_mod(std::move(t), k.degree(), p); // x^{q^step} mod p
        if (poly_gcd(poly_add(t, poly_x(k)), p).deg() != 0) return false;
    }
    return true;
}

std::vector<u64> smallest_irreducible(const Gf2m& k, unsigned n) {
    ASZ_CHECK(n >= 1);
    const u64 q = u64(1) << k.degree();
    std::vector<u64> c(n + 1, 0);
    c[n] = 1;
    c[0] = 1;
    for (;;) {
        PolyGf2m cand(k, c);
        if (poly_irreducible(cand)) return c;
        // next coefficient vector, radix q, constant term kept nonzero
        size_t i = 0;
        for (;;) {
            ASZ_CHECK_MSG(i < n, "no irreducible polynomial found");
            if (++c[i] < q) break;
            c[i] = (i == 0) ? 1 : 0;
            ++i;
        }
    }
}

} // namespace aszeta
