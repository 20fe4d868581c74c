#include "aszeta/quadform.hpp"

#include <bit>

#include "aszeta/check.hpp"

namespace aszeta {

QuadraticSpace build_space(const FieldCtxPtr& ctx, const AdditivePoly& r) {
    ASZ_CHECK(ctx && r.k);
    if (!(*r.k == ctx->base()))
        throw input_error("additive polynomial and field context disagree on the base field");
    const size_t m = ctx->m(), n = ctx->n(), k = ctx->abs_degree();

    // Absolute traces of g^T u^S; a basis product e_{s1 m + t1} e_{s2 m + t2}
    // is g^{t1+t2} u^{s1+s2}, so 4k values cover the whole k x k trace gram.
    std::vector<std::vector<int>> tr(2 * m - 1, std::vector<int>(2 * n - 1));
    {
        std::vector<u64> us(ctx->words()), u(ctx->words(), 0), tmp(ctx->words());
        ctx->set_one(us.data());
        if (n > 1) u[1] = 1;
        for (size_t S = 0; S < 2 * n - 1; ++S) {
            if (S > 0) ctx->mul(us.data(), u.data(), us.data());
            u64 gt = 1;
            for (size_t T = 0; T < 2 * m - 1; ++T) {
                if (T > 0) gt = ctx->base().mul(gt, 2);
                ctx->scalar_mul(gt, us.data(), tmp.data());
                tr[T][S] = ctx->abs_trace(tmp.data());
            }
        }
    }
    BitMat tg(k, k);
    for (size_t i = 0; i < k; ++i) {
        const size_t s1 = i / m, t1 = i % m;
        for (size_t j = 0; j < k; ++j)
            if (tr[t1 + j % m][s1 + j / m]) tg.set(i, j, true);
    }

    // Column j of y is the packed image R(e_j).
    BitMat y(k, k);
    {
        std::vector<u64> x(ctx->words()), img(ctx->words()), bits(ctx->bit_words());
        for (size_t j = 0; j < k; ++j) {
            std::fill(x.begin(), x.end(), 0);
            x[j / m] = u64(1) << (j % m);
            additive_eval(r, *ctx, x.data(), img.data());
            ctx->pack_bits(img.data(), bits.data());
            for (size_t t = 0; t < k; ++t)
                if ((bits[t / 64] >> (t % 64)) & 1) y.set(t, j, true);
        }
    }

    // g1[i][j] = Tr(e_i R(e_j)); the form values sit on its diagonal and the
    // polarized bilinear form is g1 + g1^T.
    BitMat g1 = tg.mul(y);
    QuadraticSpace s;
    s.dim = k;
    s.gram = g1;
    BitMat g1t = g1.transposed();
    for (size_t i = 0; i < k; ++i) s.gram.xor_row_from(i, g1t.row(i));
    s.diag.assign((k + 63) / 64, 0);
    for (size_t j = 0; j < k; ++j)
        if (g1.get(j, j)) s.diag[j / 64] |= u64(1) << (j % 64);
    return s;
}

FormClass classify(const QuadraticSpace& s) {
    const size_t k = s.dim;
    const size_t nw = (k + 63) / 64;
    ASZ_CHECK(s.gram.rows() == k && s.gram.cols() == k && s.diag.size() == nw);

    BitMat g = s.gram;
    std::vector<u64> dq = s.diag;
    std::vector<u64> alive(nw, 0);
    for (size_t i = 0; i < k; ++i) alive[i / 64] |= u64(1) << (i % 64);

    auto bit = [](const std::vector<u64>& v, size_t i) {
        return (int)((v[i / 64] >> (i % 64)) & 1);
    };
    auto clear = [](std::vector<u64>& v, size_t i) { v[i / 64] &= ~(u64(1) << (i % 64)); };

    int arf = 0;
    unsigned pairs = 0;
    for (;;) {
        size_t pi = k, pj = k;
        for (size_t i = 0; i < k && pi == k; ++i) {
            if (!bit(alive, i)) continue;
            const u64* row = g.row(i);
            for (size_t w = 0; w < nw; ++w) {
                const u64 x = row[w] & alive[w];
                if (x) {
                    pi = i;
                    pj = w * 64 + (size_t)std::countr_zero(x);
                    break;
                }
            }
        }
        if (pi == k) break; // the bilinear form vanishes on what is left

        // Pairings of the pivot plane with the rest: a_t = b(t, pi),
        // b_t = b(t, pj).
        std::vector<u64> a(nw, 0), b(nw, 0);
        for (size_t t = 0; t < k; ++t) {
            if (!bit(alive, t)) continue;
            if (g.get(t, pi)) a[t / 64] |= u64(1) << (t % 64);
            if (g.get(t, pj)) b[t / 64] |= u64(1) << (t % 64);
        }
        const int qi = bit(dq, pi), qj = bit(dq, pj);
        arf ^= qi & qj;
        ++pairs;
        clear(alive, pi);
        clear(alive, pj);
        for (size_t w = 0; w < nw; ++w) {
            a[w] &= alive[w];
            b[w] &= alive[w];
        }

        // Replace e_t by e_t + b_t e_pi + a_t e_pj, which is orthogonal to
        // the pivot plane; the form value picks up b_t q(pi) + a_t q(pj)
        // + a_t b_t.
        for (size_t w = 0; w < nw; ++w) {
            if (qi) dq[w] ^= b[w];
            if (qj) dq[w] ^= a[w];
            dq[w] ^= a[w] & b[w];
            u64 sel = a[w] | b[w];
            while (sel) {
                const size_t t = w * 64 + (size_t)std::countr_zero(sel);
                sel &= sel - 1;
                if (bit(b, t)) g.xor_row(t, pi);
                if (bit(a, t)) g.xor_row(t, pj);
            }
        }
    }

    FormClass f;
    for (size_t w = 0; w < nw; ++w) f.c += (unsigned)std::popcount(alive[w]);
    ASZ_CHECK(2 * pairs + f.c == k);
    bool q_on_radical = false;
    for (size_t w = 0; w < nw; ++w)
        if (dq[w] & alive[w]) q_on_radical = true;
    if (q_on_radical) {
        f.eps = 0;
        f.arf = 0;
    } else {
        f.arf = arf;
        f.eps = arf ? -1 : +1;
    }
    return f;
}

mpz_class exp_sum(const FormClass& f, size_t dim) {
    if (f.eps == 0) return 0;
    ASZ_CHECK_MSG((dim + f.c) % 2 == 0,
                  "a nonzero sum needs dim + c even; parity mismatch means a "
                  "classification bug");
    mpz_class v = mpz_class(1) << ((dim + f.c) / 2);
    return f.eps > 0 ? v : -v;
}

} // namespace aszeta
