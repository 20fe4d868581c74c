#include "aszeta/suzuki.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "aszeta/arithfns.hpp"
#include "aszeta/check.hpp"

namespace aszeta {

namespace {

void require_h(unsigned h) {
    if (h < 1) throw input_error("the family needs h >= 1");
    if (h + 1 > kMaxTwoDegree)
        throw feasibility_error("h = " + std::to_string(h) + " gives 2-degree " +
                                std::to_string(h + 1) + ", beyond the supported bound");
}

void require_n(unsigned long n) {
    if (n == 0) throw input_error("extension degree must be positive");
}

int chi8_of(unsigned long x) { return chi8((long)(x & 7)); }

} // namespace

CurveSpec suzuki_curve_spec(unsigned h) {
    require_h(h);
    CurveSpec s;
    s.m = 1;
    s.modulus = 0;
    s.a.assign(h + 2, 0);
    s.a[h] = 1;
    s.a[h + 1] = 1;
    return s;
}

unsigned suzuki_splitting_degree(unsigned h) {
    require_h(h);
    return 4 * h + 2;
}

unsigned suzuki_c(unsigned h, unsigned long n) {
    require_h(h);
    require_n(n);
    const unsigned long g = std::gcd(n, 2ul * h + 1);
    return (unsigned)(g + (n % 2 == 0 ? 1 : 0));
}

int suzuki_epsilon(unsigned h, unsigned long n) {
    require_h(h);
    require_n(n);
    const unsigned long r = 2ul * h + 1;
    const unsigned long g = std::gcd(n, r);
    if (n % 2 == 1) return chi8_of(n) * chi8_of(g);
    const unsigned v = (unsigned)__builtin_ctzll(n);
    if (v == 1) return 0;
    const int s = chi8_of(r) * chi8_of(g);
    return v == 2 ? s : -s;
}

// Counts below grow like 2^n, so their bit size is the real cost; keep the
// same output bound as the generic reconstruction path.
static constexpr unsigned long kMaxBits = 1ul << 26;

mpz_class suzuki_sum(unsigned h, unsigned long n) {
    if (n > kMaxBits)
        throw feasibility_error("the sum at degree " + std::to_string(n) +
                                " has about " + std::to_string(n) +
                                "/2 bits, above the output bound");
    const int e = suzuki_epsilon(h, n);
    if (e == 0) return 0;
    const unsigned long c = suzuki_c(h, n);
    ASZ_CHECK_MSG((n + c) % 2 == 0, "the radical dimension must match the parity of n");
    const mpz_class v = mpz_class(1) << ((n + c) / 2);
    return e < 0 ? mpz_class(-v) : v;
}

mpz_class suzuki_curve_count(unsigned h, unsigned long n) {
    const mpz_class s = suzuki_sum(h, n);
    const unsigned long g = std::gcd(n, 2ul * h + 1);
    return (mpz_class(1) << n) + 1 + ((mpz_class(1) << g) - 1) * s;
}

mpz_class suzuki_count_exhaustive(unsigned h, unsigned n) {
    require_h(h);
    require_n(n);
    if (n > 10)
        throw feasibility_error("brute-force pair enumeration stops at degree 10 (4^n pairs)");

    FieldCtxPtr base = FieldCtx::base_field(1);
    FieldCtxPtr F = FieldCtx::extension(base, n);
    const mpz_class q0 = mpz_class(1) << h;
    const mpz_class q = mpz_class(1) << (2 * h + 1);

    const u64 total = u64(1) << n;
    std::vector<FieldElem> elems(total, FieldElem(F));
    std::vector<FieldElem> lhs(total, FieldElem(F)); // y^q + y per element
    for (u64 c = 0; c < total; ++c) {
        FieldElem e(F);
        F->unpack_bits(&c, e.data());
        elems[c] = e;
        lhs[c] = e.pow(q) + e;
    }

    long long count = 0;
    for (u64 cx = 0; cx < total; ++cx) {
        const FieldElem& x = elems[cx];
        const FieldElem rhs = x.pow(q0) * (x.pow(q) + x);
        for (u64 cy = 0; cy < total; ++cy)
            if (lhs[cy] == rhs) ++count;
    }
    return mpz_class((long)count) + 1;
}

} // namespace aszeta
