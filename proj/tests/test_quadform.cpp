#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aszeta/check.hpp"
#include "aszeta/quadform.hpp"

using namespace aszeta;

namespace {

// Direct evaluation of q(x) = abs_trace(x R(x)) from packed coordinates.
int q_direct(const FieldCtxPtr& ctx, const AdditivePoly& r, u64 bits) {
    std::vector<u64> x(ctx->words()), v(ctx->words());
    ctx->unpack_bits(&bits, x.data());
    additive_eval(r, *ctx, x.data(), v.data());
    ctx->mul(x.data(), v.data(), v.data());
    return ctx->abs_trace(v.data());
}

// q via the space: q(sum_i e_i) = sum q(e_i) + sum_{i<j} b(e_i, e_j).
int q_from_space(const QuadraticSpace& s, u64 bits) {
    int acc = 0;
    for (size_t i = 0; i < s.dim; ++i) {
        if (!((bits >> i) & 1)) continue;
        acc ^= (int)((s.diag[i / 64] >> (i % 64)) & 1);
        for (size_t j = i + 1; j < s.dim; ++j)
            if ((bits >> j) & 1) acc ^= (int)s.gram.get(i, j);
    }
    return acc;
}

AdditivePoly random_r(const Gf2m& k, std::mt19937_64& rng, unsigned dmax) {
    std::vector<u64> a(2 + rng() % dmax);
    for (u64& w : a) w = rng() & k.mask();
    a.back() = 1 + rng() % k.mask();
    return AdditivePoly(k, std::move(a));
}

} // namespace

TEST_CASE("bit matrices") {
    BitMat m(3, 3);
    m.set(0, 1, true);
    m.set(1, 2, true);
    CHECK(m.get(0, 1));
    CHECK(!m.get(1, 0));
    const BitMat t = m.transposed();
    CHECK(t.get(1, 0));
    CHECK(t.get(2, 1));
    // (m^T m)_{ij} = sum_k m_{ki} m_{kj}
    const BitMat p = t.mul(m);
    CHECK(p.get(1, 1));
    CHECK(p.get(2, 2));
    CHECK(!p.get(1, 2));
    m.xor_row(0, 1);
    CHECK(m.get(0, 2));

    u64 a = 0b1011, b = 0b0011;
    CHECK(bit_dot(&a, &b, 1) == 0);
    b = 0b0001;
    CHECK(bit_dot(&a, &b, 1) == 1);
}

TEST_CASE("gram matrix matches the polarization identity") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
        const unsigned m = 1 + rng() % 2;
        const unsigned n = 1 + rng() % (10 / m);
        const FieldCtxPtr ext = FieldCtx::extension(FieldCtx::base_field(m), n);
        const AdditivePoly r = random_r(ext->base(), rng, 3);
        const QuadraticSpace s = build_space(ext, r);
        const size_t k = ext->abs_degree();
        REQUIRE(s.dim == k);
        for (size_t i = 0; i < k; ++i) {
            CHECK(!s.gram.get(i, i));
            const int qi = q_direct(ext, r, u64(1) << i);
            CHECK(qi == (int)((s.diag[i / 64] >> (i % 64)) & 1));
            for (size_t j = i + 1; j < k; ++j) {
                const int qj = q_direct(ext, r, u64(1) << j);
                const int qij = q_direct(ext, r, (u64(1) << i) | (u64(1) << j));
                CHECK((int)s.gram.get(i, j) == (qij ^ qi ^ qj));
                CHECK(s.gram.get(i, j) == s.gram.get(j, i));
            }
        }
    }
}

TEST_CASE("space evaluation reproduces the trace form everywhere") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 10; ++t) {
        const unsigned m = 1 + rng() % 2;
        const unsigned n = 1 + rng() % (8 / m);
        const FieldCtxPtr ext = FieldCtx::extension(FieldCtx::base_field(m), n);
        const AdditivePoly r = random_r(ext->base(), rng, 2);
        const QuadraticSpace s = build_space(ext, r);
        for (u64 bits = 0; bits < (u64(1) << ext->abs_degree()); ++bits)
            CHECK(q_from_space(s, bits) == q_direct(ext, r, bits));
    }
}

TEST_CASE("classification of the first family curve") {
    const FieldCtxPtr base = FieldCtx::base_field(1);
    const Gf2m& k = base->base();
    const AdditivePoly r(k, {0, 1, 1});
    const unsigned want_c[] = {1, 2, 3, 2};
    const int want_eps[] = {1, 0, 1, -1};
    for (unsigned n = 1; n <= 4; ++n) {
        const FieldCtxPtr ext = n == 1 ? base : FieldCtx::extension(base, n);
        const FormClass f = classify(build_space(ext, r));
        CHECK(f.c == want_c[n - 1]);
        CHECK(f.eps == want_eps[n - 1]);
    }
}

TEST_CASE("exponential sum equals direct enumeration") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 14; ++t) {
        const unsigned m = 1 + rng() % 2;
        const unsigned n = 1 + rng() % (16 / m);
        const FieldCtxPtr ext = FieldCtx::extension(FieldCtx::base_field(m), n);
        const AdditivePoly r = random_r(ext->base(), rng, 3);
        const FormClass f = classify(build_space(ext, r));
        mpz_class direct = 0;
        std::vector<u64> x(ext->words()), v(ext->words());
        for (u64 bits = 0; bits < (u64(1) << ext->abs_degree()); ++bits) {
            ext->unpack_bits(&bits, x.data());
            additive_eval(r, *ext, x.data(), v.data());
            ext->mul(x.data(), v.data(), v.data());
            direct += ext->abs_trace(v.data()) ? -1 : 1;
        }
        CHECK(exp_sum(f, ext->abs_degree()) == direct);
        // radical dimension agrees with the kernel-polynomial route
        CHECK(f.c == radical_dim(r, m, n));
    }
}

TEST_CASE("classification is basis-invariant") {
    // conjugating the gram matrix and transporting the diagonal by a random
    // invertible transform must not change (c, eps)
    std::mt19937_64 rng(43);
    for (int t = 0; t < 12; ++t) {
        const unsigned m = 1 + rng() % 2;
        const unsigned n = 1 + rng() % (10 / m);
        const FieldCtxPtr ext = FieldCtx::extension(FieldCtx::base_field(m), n);
        const AdditivePoly r = random_r(ext->base(), rng, 2);
        const QuadraticSpace s = build_space(ext, r);
        const size_t k = s.dim;

        // random invertible T: start from identity, apply row operations
        BitMat tm(k, k);
        for (size_t i = 0; i < k; ++i) tm.set(i, i, true);
        for (int op = 0; op < 60; ++op) {
            const size_t i = rng() % k, j = rng() % k;
            if (i != j) tm.xor_row(i, j);
        }

        QuadraticSpace s2;
        s2.dim = k;
        s2.gram = BitMat(k, k);
        s2.diag.assign((k + 63) / 64, 0);
        for (size_t i = 0; i < k; ++i) {
            u64 rowbits = tm.row(i)[0];
            const int qi = q_from_space(s, rowbits);
            if (qi) s2.diag[i / 64] |= u64(1) << (i % 64);
            for (size_t j = i + 1; j < k; ++j) {
                const int qj = q_from_space(s, tm.row(j)[0]);
                const int qij = q_from_space(s, rowbits ^ tm.row(j)[0]);
                const bool b = ((qij ^ qi ^ qj) & 1) != 0;
                s2.gram.set(i, j, b);
                s2.gram.set(j, i, b);
            }
        }
        const FormClass f1 = classify(s);
        const FormClass f2 = classify(s2);
        CHECK(f1.c == f2.c);
        CHECK(f1.eps == f2.eps);
    }
}

TEST_CASE("exponential sum rejects parity violations") {
    FormClass f;
    f.c = 1;
    f.eps = 1;
    CHECK_THROWS_AS(exp_sum(f, 2), internal_error);  // dim + c odd
    f.c = 0;
    f.eps = 0;
    CHECK(exp_sum(f, 2) == 0);
}
