#include "aszeta/zsqrt2.hpp"

#include <numeric>

#include "aszeta/arithfns.hpp"
#include "aszeta/check.hpp"

namespace aszeta {

ZSqrt2 ZSqrt2::sqrt2_pow(unsigned long k) {
    mpz_class p = mpz_class(1) << (k / 2);
    return (k % 2 == 0) ? ZSqrt2(p) : ZSqrt2(0, p);
}

std::string ZSqrt2::str() const {
    if (b == 0) return a.get_str();
    std::string s;
    if (a != 0) s = a.get_str() + (b > 0 ? "+" : "");
    if (b == 1)
        s += "sqrt2";
    else if (b == -1)
        s += "-sqrt2";
    else
        s += b.get_str() + "*sqrt2";
    return s;
}

PolyZSqrt2 PolyZSqrt2::operator*(const PolyZSqrt2& o) const {
    if (c.empty() || o.c.empty()) return PolyZSqrt2();
    std::vector<ZSqrt2> r(c.size() + o.c.size() - 1);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] = r[i + j] + c[i] * o.c[j];
    return PolyZSqrt2(std::move(r));
}

PolyZSqrt2 PolyZSqrt2::conj() const {
    std::vector<ZSqrt2> r;
    r.reserve(c.size());
    for (const ZSqrt2& z : c) r.push_back(z.conj());
    return PolyZSqrt2(std::move(r));
}

bool PolyZSqrt2::is_integer() const {
    for (const ZSqrt2& z : c)
        if (!z.is_integer()) return false;
    return true;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> num,
                                     const std::vector<mpz_class>& den) {
    ASZ_CHECK(!den.empty() && den.back() != 0);
    ASZ_CHECK(num.size() >= den.size());
    std::vector<mpz_class> q(num.size() - den.size() + 1, mpz_class(0));
    for (size_t i = q.size(); i-- > 0;) {
        mpz_class t = num[i + den.size() - 1];
        ASZ_CHECK_MSG(t % den.back() == 0, "division of cyclotomic factors must be exact");
        t /= den.back();
        q[i] = t;
        if (t != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= t * den[j];
    }
    for (const mpz_class& r : num) ASZ_CHECK_MSG(r == 0, "nonzero remainder");
    return q;
}

std::vector<mpz_class> poly_mul_int(const std::vector<mpz_class>& a,
                                    const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<mpz_class> x_pow_minus_one(long e) {
    std::vector<mpz_class> p(e + 1, mpz_class(0));
    p[0] = -1;
    p[e] = 1;
    return p;
}

} // namespace

std::vector<mpz_class> cyclo(long ell) {
    ASZ_CHECK(ell >= 1);
    // prod over d | ell of (x^{ell/d} - 1)^{mu(d)}
    std::vector<mpz_class> num{mpz_class(1)}, den{mpz_class(1)};
    for (long d : divisors(ell)) {
        const int mu = moebius(d);
        if (mu == 1)
            num = poly_mul_int(num, x_pow_minus_one(ell / d));
        else if (mu == -1)
            den = poly_mul_int(den, x_pow_minus_one(ell / d));
    }
    std::vector<mpz_class> phi = poly_divexact(std::move(num), den);
    ASZ_CHECK((long)phi.size() == totient(ell) + 1 && phi.back() == 1);
    return phi;
}

std::vector<mpz_class> cyclo_rev(long ell) {
    std::vector<mpz_class> phi = cyclo(ell);
    std::reverse(phi.begin(), phi.end());
    return phi;
}

CycloRing::CycloRing(long ell) : ell_(ell), phi_(cyclo(ell)) {
    dim_ = phi_.size() - 1;
    ypow_.resize(2 * dim_ > (size_t)ell_ ? 2 * dim_ : (size_t)ell_);
    for (size_t e = 0; e < ypow_.size(); ++e) {
        Elem v(dim_, mpz_class(0));
        if (e < dim_) {
            v[e] = 1;
        } else {
            // y * ypow_[e-1] reduced by the monic modulus
            const Elem& prev = ypow_[e - 1];
            mpz_class top = prev[dim_ - 1];
            for (size_t i = dim_ - 1; i > 0; --i) v[i] = prev[i - 1];
            v[0] = 0;
            if (top != 0)
                for (size_t i = 0; i < dim_; ++i) v[i] -= top * phi_[i];
        }
        ypow_[e] = std::move(v);
    }
    if (ell_ % 8 == 0) {
        sqrt2_ = add(y_pow(ell_ / 8), y_pow(7 * (ell_ / 8)));
        Elem sq = mul(sqrt2_, sqrt2_);
        ASZ_CHECK_MSG(sq == from_int(2), "the eighth-root combination must square to 2");
    }
}

CycloRing::Elem CycloRing::from_int(const mpz_class& v) const {
    Elem e = zero();
    e[0] = v;
    return e;
}

const CycloRing::Elem& CycloRing::y_pow(long e) const {
    long r = e % ell_;
    if (r < 0) r += ell_;
    return ypow_[(size_t)r];
}

CycloRing::Elem CycloRing::add(const Elem& x, const Elem& y) const {
    Elem r(dim_);
    for (size_t i = 0; i < dim_; ++i) r[i] = x[i] + y[i];
    return r;
}

CycloRing::Elem CycloRing::mul(const Elem& x, const Elem& y) const {
    Elem r = zero();
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const mpz_class prod = x[i] * y[j];
            const Elem& basis = ypow_[i + j];
            for (size_t t = 0; t < dim_; ++t)
                if (basis[t] != 0) r[t] += prod * basis[t];
        }
    }
    return r;
}

CycloRing::Elem CycloRing::mul_y_pow(const Elem& x, long e) const {
    long r = e % ell_;
    if (r < 0) r += ell_;
    Elem out = zero();
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        const Elem& basis = y_pow((long)i + r);
        for (size_t t = 0; t < dim_; ++t)
            if (basis[t] != 0) out[t] += x[i] * basis[t];
    }
    return out;
}

const CycloRing::Elem& CycloRing::sqrt2() const {
    ASZ_CHECK_MSG(ell_ % 8 == 0, "sqrt(2) lives in the ring only when 8 divides the index");
    return sqrt2_;
}

bool CycloRing::to_zsqrt2(const Elem& x, ZSqrt2& out) const {
    ASZ_CHECK(ell_ % 8 == 0);
    const Elem& s = sqrt2_;
    // x = u*1 + v*s with integers u, v: coordinates above 0 pin v.
    mpz_class v = 0;
    bool have_v = false;
    for (size_t i = 1; i < dim_; ++i) {
        if (s[i] == 0) {
            if (x[i] != 0) return false;
            continue;
        }
        if (!have_v) {
            if (x[i] % s[i] != 0) return false;
            v = x[i] / s[i];
            have_v = true;
        } else if (x[i] != v * s[i]) {
            return false;
        }
    }
    const mpz_class u = x[0] - v * s[0];
    out = ZSqrt2(u, v);
    return true;
}

std::pair<PolyZSqrt2, PolyZSqrt2> cyclo_split(long ell) {
    ASZ_CHECK_MSG(ell % 8 == 0, "the split exists exactly when 8 divides the index");
    const CycloRing ring(ell);
    const size_t half = (size_t)totient(ell) / 2;

    auto orbit_product = [&](int sign) {
        // prod over units i with chi(i) = sign of (1 - y^i T), in T
        std::vector<CycloRing::Elem> p{ring.from_int(1)};
        for (long i = 1; i < ell; ++i) {
            if (std::gcd(i, ell) != 1 || chi8(i) != sign) continue;
            std::vector<CycloRing::Elem> next(p.size() + 1, ring.zero());
            for (size_t t = 0; t < p.size(); ++t) {
                next[t] = ring.add(next[t], p[t]);
                // subtract y^i * p[t] at degree t+1
                CycloRing::Elem shifted = ring.mul_y_pow(p[t], i);
                for (size_t c = 0; c < ring.dim(); ++c) next[t + 1][c] -= shifted[c];
            }
            p = std::move(next);
        }
        ASZ_CHECK(p.size() == half + 1);
        std::vector<ZSqrt2> coeffs(p.size());
        for (size_t t = 0; t < p.size(); ++t)
            ASZ_CHECK_MSG(ring.to_zsqrt2(p[t], coeffs[t]),
                          "split coefficients must lie in Z[sqrt(2)]");
        return PolyZSqrt2(std::move(coeffs));
    };

    PolyZSqrt2 plus = orbit_product(+1);
    PolyZSqrt2 minus = orbit_product(-1);

    ASZ_CHECK_MSG(minus == plus.conj(), "the two halves must be sqrt(2)-conjugate");
    const std::vector<mpz_class> full = cyclo_rev(ell);
    const PolyZSqrt2 prod = plus * minus;
    ASZ_CHECK((size_t)prod.deg() + 1 == full.size());
    for (size_t i = 0; i < full.size(); ++i)
        ASZ_CHECK_MSG(prod.coeff(i) == ZSqrt2(full[i]),
                      "the halves must multiply back to the reversed cyclotomic");
    return {std::move(plus), std::move(minus)};
}

} // namespace aszeta
