#include "aszeta/brute.hpp"

#include <algorithm>
#include <vector>

#include "aszeta/check.hpp"

namespace aszeta {

namespace {

void require_enumerable(const FieldCtxPtr& ctx, const AdditivePoly& r, unsigned max_bits) {
    ASZ_CHECK(ctx && r.k);
    if (!(*r.k == ctx->base()))
        throw input_error("additive polynomial and field context disagree on the base field");
    if (ctx->abs_degree() > max_bits)
        throw feasibility_error("field too large to enumerate (2^" +
                                std::to_string(ctx->abs_degree()) + " elements)");
}

void basis_vectors(const FieldCtx& ctx, std::vector<std::vector<u64>>& bas) {
    const size_t m = ctx.m(), k = ctx.abs_degree();
    bas.assign(k, std::vector<u64>(ctx.words(), 0));
    for (size_t t = 0; t < k; ++t) bas[t][t / m] = u64(1) << (t % m);
}

} // namespace

mpz_class brute_sum_serial(const FieldCtxPtr& ctx, const AdditivePoly& r) {
    require_enumerable(ctx, r, 62);
    const size_t k = ctx->abs_degree();
    const u64 total = u64(1) << k;
    std::vector<u64> x(ctx->words()), rx(ctx->words()), prod(ctx->words());
    long long acc = 0;
    for (u64 c = 0; c < total; ++c) {
        ctx->unpack_bits(&c, x.data());
        additive_eval(r, *ctx, x.data(), rx.data());
        ctx->mul(x.data(), rx.data(), prod.data());
        acc += 1 - 2 * ctx->abs_trace(prod.data());
    }
    return mpz_class((long)acc);
}

mpz_class brute_sum(const FieldCtxPtr& ctx, const AdditivePoly& r) {
    require_enumerable(ctx, r, 62);
    const size_t m = ctx->m(), k = ctx->abs_degree(), nw = ctx->words();
    const u64 total = u64(1) << k;

    std::vector<std::vector<u64>> bas;
    basis_vectors(*ctx, bas);
    std::vector<std::vector<u64>> rbas(k, std::vector<u64>(nw));
    for (size_t t = 0; t < k; ++t) additive_eval(r, *ctx, bas[t].data(), rbas[t].data());

    const u64 nchunks = std::min<u64>(total, 1024);
    const u64 chunk = total / nchunks;
    long long acc = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : acc)
    for (u64 ci = 0; ci < nchunks; ++ci) {
        const u64 lo = ci * chunk;
        const u64 hi = (ci + 1 == nchunks) ? total : lo + chunk;
        std::vector<u64> x(nw), rx(nw), prod(nw);
        const u64 g0 = lo ^ (lo >> 1);
        ctx->unpack_bits(&g0, x.data());
        additive_eval(r, *ctx, x.data(), rx.data());
        long long part = 0;
        for (u64 c = lo;;) {
            ctx->mul(x.data(), rx.data(), prod.data());
            part += 1 - 2 * ctx->abs_trace(prod.data());
            if (++c >= hi) break;
            // Gray step: index c differs from c-1 in bit ctz(c).
            const unsigned t = (unsigned)__builtin_ctzll(c);
            x[t / m] ^= u64(1) << (t % m);
            ctx->add(rx.data(), rbas[t].data(), rx.data());
        }
        acc += part;
    }
    return mpz_class((long)acc);
}

namespace {

template <bool Parallel>
mpz_class affine_pairs_impl(const FieldCtxPtr& ctx, const AdditivePoly& r) {
    require_enumerable(ctx, r, 16);
    const size_t k = ctx->abs_degree(), nw = ctx->words();
    const u64 total = u64(1) << k;

    // y^2 + y, tabulated once.
    std::vector<std::vector<u64>> art(total, std::vector<u64>(nw));
    {
        std::vector<u64> y(nw);
        for (u64 c = 0; c < total; ++c) {
            ctx->unpack_bits(&c, y.data());
            ctx->sqr(y.data(), art[c].data());
            ctx->add(art[c].data(), y.data(), art[c].data());
        }
    }

    long long count = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : count) if (Parallel)
    for (u64 cx = 0; cx < total; ++cx) {
        std::vector<u64> x(nw), rx(nw), prod(nw);
        ctx->unpack_bits(&cx, x.data());
        additive_eval(r, *ctx, x.data(), rx.data());
        ctx->mul(x.data(), rx.data(), prod.data());
        long long c = 0;
        for (u64 cy = 0; cy < total; ++cy)
            if (std::equal(prod.begin(), prod.end(), art[cy].begin())) ++c;
        count += c;
    }
    return mpz_class((long)count);
}

} // namespace

mpz_class affine_pairs_serial(const FieldCtxPtr& ctx, const AdditivePoly& r) {
    return affine_pairs_impl<false>(ctx, r);
}

mpz_class affine_pairs(const FieldCtxPtr& ctx, const AdditivePoly& r) {
    return affine_pairs_impl<true>(ctx, r);
}

mpz_class curve_solutions(const FieldCtxPtr& ctx, const AdditivePoly& r) {
    require_enumerable(ctx, r, 24);
    const size_t k = ctx->abs_degree(), nw = ctx->words();
    ASZ_CHECK(ctx->bit_words() == 1);
    const long long total = 1ll << k;

    std::vector<u64> art(total);
#pragma omp parallel for schedule(static)
    for (long long cy = 0; cy < total; ++cy) {
        std::vector<u64> y(nw), v(nw);
        const u64 bits = (u64)cy;
        ctx->unpack_bits(&bits, y.data());
        ctx->sqr(y.data(), v.data());
        ctx->add(v.data(), y.data(), v.data());
        ctx->pack_bits(v.data(), &art[cy]);
    }
    std::sort(art.begin(), art.end());

    long long count = 0;
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : count)
    for (long long cx = 0; cx < total; ++cx) {
        std::vector<u64> x(nw), rx(nw), prod(nw);
        const u64 bits = (u64)cx;
        ctx->unpack_bits(&bits, x.data());
        additive_eval(r, *ctx, x.data(), rx.data());
        ctx->mul(x.data(), rx.data(), prod.data());
        u64 key = 0;
        ctx->pack_bits(prod.data(), &key);
        const auto range = std::equal_range(art.begin(), art.end(), key);
        count += range.second - range.first;
    }
    return mpz_class((long)count);
}

} // namespace aszeta
