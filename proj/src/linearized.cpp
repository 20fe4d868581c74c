#include "aszeta/linearized.hpp"

#include <algorithm>
#include <numeric>

#include "aszeta/check.hpp"

namespace aszeta {

AdditivePoly::AdditivePoly(const Gf2m& field, std::vector<u64> coeffs)
    : k(&field), a(std::move(coeffs)) {
    if (a.empty() || a.back() == 0)
        throw input_error("additive polynomial needs a nonzero leading coefficient");
    for (u64 w : a)
        if (w & ~field.mask()) throw input_error("additive polynomial coefficient out of range");
}

void additive_eval(const AdditivePoly& p, const FieldCtx& ctx, const u64* x, u64* out) {
    ASZ_CHECK(ctx.base() == *p.k);
    std::vector<u64> pw(x, x + ctx.words()), acc(ctx.words(), 0), term(ctx.words());
    for (size_t i = 0; i < p.a.size(); ++i) {
        if (i > 0) ctx.sqr(pw.data(), pw.data());
        if (p.a[i]) {
            ctx.scalar_mul(p.a[i], pw.data(), term.data());
            ctx.add(acc.data(), term.data(), acc.data());
        }
    }
    std::copy(acc.begin(), acc.end(), out);
}

FieldElem additive_eval(const AdditivePoly& p, const FieldElem& x) {
    FieldElem r(x.ctx());
    additive_eval(p, *x.ctx(), x.data(), r.data());
    return r;
}

PolyGf2m to_ordinary(const AdditivePoly& p) {
    std::vector<u64> c((size_t(1) << p.two_degree()) + 1, 0);
    for (size_t i = 0; i < p.a.size(); ++i) c[size_t(1) << i] = p.a[i];
    return PolyGf2m(*p.k, std::move(c));
}

AdditivePoly kernel_poly(const AdditivePoly& R) {
    const Gf2m& k = *R.k;
    const unsigned d = R.two_degree();
    if (d < 1) throw input_error("kernel polynomial requires 2-degree at least one");
    std::vector<u64> c(2 * d + 1, 0);
    for (unsigned i = 0; i <= d; ++i) {
        c[d + i] ^= k.frobenius(R.a[i], d);
        c[d - i] ^= k.frobenius(R.a[i], d - i);
    }
    ASZ_CHECK_MSG(c[0] == R.a[d], "coefficient of x must equal the leading coefficient of R");
    return AdditivePoly(k, std::move(c));
}

namespace {

// One application of x ↦ x^{2^m} mod kp.
PolyGf2m frobenius_step(PolyGf2m t, unsigned m, const PolyGf2m& kp) {
    return poly_pow2_mod(std::move(t), m, kp);
}

} // namespace

unsigned splitting_degree(const PolyGf2m& kp, unsigned m) {
    ASZ_CHECK(kp.deg() >= 2);
    const Gf2m& k = *kp.k;
    const PolyGf2m x = poly_x(k);
    // The Frobenius power acts invertibly on the root space of a separable
    // additive polynomial of degree 2^{2d}, and an invertible map on a
    // 2d-dimensional F_2-space has order below 2^{2d}, so the orbit closes
    // within deg(kp) steps.
    const unsigned long guard = 2ul * (unsigned long)kp.deg();
    PolyGf2m t = x;
    for (unsigned long n = 1; n <= guard; ++n) {
        t = frobenius_step(std::move(t), m, kp);
        if (t == x) return (unsigned)n;
    }
    check_fail("splitting degree search terminated", __FILE__, __LINE__,
               "Frobenius orbit did not close");
}

namespace {

unsigned gcd_root_dim(const PolyGf2m& kp, const PolyGf2m& frob_power) {
    // gcd(kp, x^{2^{mn}} - x) via the reduced Frobenius power
    const PolyGf2m g = poly_gcd(poly_add(frob_power, poly_x(*kp.k)), kp);
    const int deg = g.deg();
    ASZ_CHECK_MSG(deg >= 1 && (deg & (deg - 1)) == 0,
                  "root count of an additive polynomial must be a power of 2");
    unsigned c = 0;
    while ((1 << c) < deg) ++c;
    return c;
}

} // namespace

unsigned radical_dim(const AdditivePoly& R, unsigned m, unsigned n) {
    const PolyGf2m kp = to_ordinary(kernel_poly(R));
    PolyGf2m t = poly_x(*R.k);
    for (unsigned i = 0; i < n; ++i) t = frobenius_step(std::move(t), m, kp);
    return gcd_root_dim(kp, t);
}

RadicalProfile radical_profile(const AdditivePoly& R, unsigned m) {
    const unsigned d = R.two_degree();
    const PolyGf2m kp = to_ordinary(kernel_poly(R));
    const PolyGf2m x = poly_x(*R.k);

    RadicalProfile out;
    std::vector<PolyGf2m> powers; // powers[i] = x^{2^{m(i+1)}} mod kp
    PolyGf2m t = x;
    const unsigned long bound = 2ul * (unsigned long)kp.deg();
    for (unsigned long n = 1; n <= bound; ++n) {
        t = frobenius_step(std::move(t), m, kp);
        powers.push_back(t);
        if (t == x) {
            out.N = (unsigned)n;
            break;
        }
    }
    ASZ_CHECK_MSG(out.N != 0, "Frobenius orbit did not close");

    out.a = 0;
    unsigned nn = out.N;
    while (nn % 2 == 0) {
        ++out.a;
        nn /= 2;
    }
    out.N_odd = nn;

    const long twoN = 2L * out.N;
    for (long dv = 1; dv <= twoN; ++dv)
        if (twoN % dv == 0) out.divisors_2N.push_back(dv);

    // extend the cached powers through 2N
    for (unsigned long n = powers.size(); n < (unsigned long)twoN; ++n) {
        t = frobenius_step(std::move(t), m, kp);
        powers.push_back(t);
    }
    for (long dv : out.divisors_2N) out.c[dv] = gcd_root_dim(kp, powers[dv - 1]);

    ASZ_CHECK_MSG(out.c.at(out.N) == 2 * d,
                  "the full root space must be defined over the splitting field");
    for (long dv : out.divisors_2N)
        ASZ_CHECK_MSG(out.c.at(dv) == out.c.at(std::gcd<long>(dv, out.N)),
                      "radical dimension must only depend on gcd with the splitting degree");
    return out;
}

} // namespace aszeta
