#include "aszeta/field_tower.hpp"

#include <cstring>
#include <map>
#include <mutex>
#include <tuple>

#include "aszeta/check.hpp"
#include "aszeta/poly_gf2m.hpp"

namespace aszeta {

FieldCtx::FieldCtx(Gf2m k, FieldCtxPtr base, unsigned n, std::vector<u64> modulus)
    : k_(std::move(k)), base_(std::move(base)), n_(n), modulus_(std::move(modulus)) {
    build_tables();
}

FieldCtxPtr FieldCtx::base_field(unsigned m) {
    return base_field(m, gf2x_smallest_irreducible(m));
}

FieldCtxPtr FieldCtx::base_field(unsigned m, u64 modulus) {
    Gf2m k(m, modulus); // validates
    return FieldCtxPtr(new FieldCtx(std::move(k), nullptr, 1, {}));
}

namespace {

std::vector<u64> memoized_smallest_irreducible(const Gf2m& k, unsigned n) {
    static std::mutex mu;
    static std::map<std::tuple<unsigned, u64, unsigned>, std::vector<u64>> cache;
    const auto key = std::make_tuple(k.degree(), k.modulus(), n);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<u64> p = smallest_irreducible(k, n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(p)).first->second;
}

} // namespace

FieldCtxPtr FieldCtx::extension(FieldCtxPtr base, unsigned n) {
    if (!base || !base->is_base())
        throw input_error("extensions are built in one step over a base context");
    if (n < 1) throw input_error("extension degree must be positive");
    std::vector<u64> modulus = memoized_smallest_irreducible(base->base(), n);
    return extension(std::move(base), n, std::move(modulus));
}

FieldCtxPtr FieldCtx::extension(FieldCtxPtr base, unsigned n, std::vector<u64> modulus) {
    if (!base || !base->is_base())
        throw input_error("extensions are built in one step over a base context");
    if (n < 1) throw input_error("extension degree must be positive");
    const Gf2m& k = base->base();
    if (modulus.size() != n + 1 || modulus[n] != 1)
        throw input_error("extension modulus must be monic of the declared degree");
    for (u64 w : modulus)
        if (w & ~k.mask()) throw input_error("extension modulus coefficient out of range");
    PolyGf2m p(k, modulus);
    if (!poly_irreducible(p))
        throw input_error("extension modulus is reducible");
    return FieldCtxPtr(new FieldCtx(k, std::move(base), n, std::move(modulus)));
}

void FieldCtx::build_tables() {
    const unsigned n = n_;
    // u^{2s} mod modulus
    std::vector<std::vector<u64>> upow(2 * n - 1);
    upow[0] = std::vector<u64>(n, 0);
    upow[0][0] = 1;
    for (size_t j = 1; j < upow.size(); ++j) {
        std::vector<u64> v(n + 1, 0);
        const std::vector<u64>& prev = upow[j - 1];
        for (size_t i = 0; i < n; ++i) v[i + 1] = prev[i];
        if (v[n]) {
            const u64 c = v[n];
            for (size_t i = 0; i < n; ++i) v[i] ^= k_.mul(c, modulus_[i]);
        }
        v.resize(n);
        upow[j] = std::move(v);
    }
    u2pow_.resize(n);
    for (size_t s = 0; s < n; ++s) u2pow_[s] = upow[2 * s];

    // Traces of the power basis via Newton's identities: with the modulus
    // u^n + sum p_j u^j, the elementary symmetric functions of its roots are
    // e_i = p_{n-i} (characteristic 2), and tau_s is their s-th power sum.
    tau_.assign(n, 0);
    tau_[0] = n & 1;
    auto e = [&](size_t i) -> u64 { return is_base() ? (i == 1 ? 1 : 0) : modulus_[n - i]; };
    // A base context behaves as the degenerate extension by u + 1 (root 1).
    for (size_t s = 1; s < n; ++s) {
        u64 acc = (s & 1) ? e(s) : 0;
        for (size_t i = 1; i < s; ++i) acc ^= k_.mul(e(i), tau_[s - i]);
        tau_[s] = acc;
    }

    abs_mask_.assign(n, 0);
    for (size_t s = 0; s < n; ++s) {
        u64 mask = 0;
        for (unsigned t = 0; t < k_.degree(); ++t)
            mask |= u64(k_.trace(k_.mul(u64(1) << t, tau_[s]))) << t;
        abs_mask_[s] = mask;
    }
}

mpz_class FieldCtx::order() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, abs_degree());
    return r;
}

bool FieldCtx::same_as(const FieldCtx& o) const {
    if (this == &o) return true;
    if (is_base() != o.is_base() || !(k_ == o.k_) || n_ != o.n_) return false;
    return modulus_ == o.modulus_;
}

void FieldCtx::set_zero(u64* out) const { std::memset(out, 0, n_ * sizeof(u64)); }

void FieldCtx::set_one(u64* out) const {
    set_zero(out);
    out[0] = 1;
}

void FieldCtx::set_base(u64 a, u64* out) const {
    ASZ_CHECK((a & ~k_.mask()) == 0);
    set_zero(out);
    out[0] = a;
}

void FieldCtx::add(const u64* a, const u64* b, u64* out) const {
    for (size_t i = 0; i < n_; ++i) out[i] = a[i] ^ b[i];
}

void FieldCtx::mul(const u64* a, const u64* b, u64* out) const {
    const size_t n = n_;
    if (n == 1) {
        out[0] = k_.mul(a[0], b[0]);
        return;
    }
    thread_local std::vector<u64> tmp;
    tmp.assign(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            if (b[j]) tmp[i + j] ^= k_.mul(a[i], b[j]);
    }
    for (size_t j = 2 * n - 2; j >= n; --j) {
        const u64 c = tmp[j];
        if (c)
            for (size_t i = 0; i < n; ++i) tmp[j - n + i] ^= k_.mul(c, modulus_[i]);
    }
    std::memcpy(out, tmp.data(), n * sizeof(u64));
}

void FieldCtx::sqr(const u64* a, u64* out) const {
    const size_t n = n_;
    if (n == 1) {
        out[0] = k_.sqr(a[0]);
        return;
    }
    thread_local std::vector<u64> tmp;
    tmp.assign(n, 0);
    for (size_t s = 0; s < n; ++s) {
        const u64 c = k_.sqr(a[s]);
        if (c == 0) continue;
        const std::vector<u64>& p = u2pow_[s];
        for (size_t i = 0; i < n; ++i)
            if (p[i]) tmp[i] ^= k_.mul(c, p[i]);
    }
    std::memcpy(out, tmp.data(), n * sizeof(u64));
}

void FieldCtx::pow(const u64* a, const mpz_class& e, u64* out) const {
    ASZ_CHECK(e >= 0);
    std::vector<u64> base(a, a + n_), acc(n_, 0);
    acc[0] = 1;
    if (e != 0) {
        const size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = nb; i-- > 0;) {
            sqr(acc.data(), acc.data());
            if (mpz_tstbit(e.get_mpz_t(), i)) mul(acc.data(), base.data(), acc.data());
        }
    }
    std::memcpy(out, acc.data(), n_ * sizeof(u64));
}

void FieldCtx::frobenius_base(const u64* a, u64* out) const {
    std::memmove(out, a, n_ * sizeof(u64));
    for (unsigned i = 0; i < k_.degree(); ++i) sqr(out, out);
}

void FieldCtx::scalar_mul(u64 a, const u64* x, u64* out) const {
    for (size_t i = 0; i < n_; ++i) out[i] = k_.mul(a, x[i]);
}

bool FieldCtx::is_zero(const u64* a) const {
    for (size_t i = 0; i < n_; ++i)
        if (a[i]) return false;
    return true;
}

u64 FieldCtx::rel_trace(const u64* a) const {
    u64 acc = 0;
    for (size_t s = 0; s < n_; ++s) acc ^= k_.mul(a[s], tau_[s]);
    return acc;
}

int FieldCtx::abs_trace(const u64* a) const {
    u64 acc = 0;
    for (size_t s = 0; s < n_; ++s) acc ^= a[s] & abs_mask_[s];
    return __builtin_parityll(acc);
}

void FieldCtx::pack_bits(const u64* x, u64* out) const {
    const unsigned m = k_.degree();
    std::memset(out, 0, bit_words() * sizeof(u64));
    for (size_t s = 0; s < n_; ++s) {
        const size_t pos = s * m, w = pos / 64, off = pos % 64;
        out[w] |= x[s] << off;
        if (off && off + m > 64) out[w + 1] |= x[s] >> (64 - off);
    }
}

void FieldCtx::unpack_bits(const u64* bits, u64* x) const {
    const unsigned m = k_.degree();
    const u64 mask = k_.mask();
    for (size_t s = 0; s < n_; ++s) {
        const size_t pos = s * m, w = pos / 64, off = pos % 64;
        u64 v = bits[w] >> off;
        if (off && off + m > 64) v |= bits[w + 1] << (64 - off);
        x[s] = v & mask;
    }
}

FieldElem::FieldElem(FieldCtxPtr ctx, std::vector<u64> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.size() != ctx_->words())
        throw input_error("element coefficient vector has the wrong length");
    for (u64 w : c_)
        if (w & ~ctx_->base().mask()) throw input_error("element coefficient out of range");
}

FieldElem FieldElem::one(FieldCtxPtr ctx) { return from_base(std::move(ctx), 1); }

FieldElem FieldElem::from_base(FieldCtxPtr ctx, u64 a) {
    FieldElem e(ctx);
    ctx->set_base(a, e.data());
    return e;
}

void require_same_ctx(const FieldElem& a, const FieldElem& b) {
    if (a.ctx() == b.ctx()) return;
    if (a.ctx() && b.ctx() && a.ctx()->same_as(*b.ctx())) return;
    throw input_error("operands belong to different field contexts");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_ctx(*this, o);
    FieldElem r(ctx_);
    ctx_->add(data(), o.data(), r.data());
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_ctx(*this, o);
    FieldElem r(ctx_);
    ctx_->mul(data(), o.data(), r.data());
    return r;
}

FieldElem FieldElem::sqr() const {
    FieldElem r(ctx_);
    ctx_->sqr(data(), r.data());
    return r;
}

FieldElem FieldElem::pow(const mpz_class& e) const {
    FieldElem r(ctx_);
    ctx_->pow(data(), e, r.data());
    return r;
}

FieldElem FieldElem::frobenius_base() const {
    FieldElem r(ctx_);
    ctx_->frobenius_base(data(), r.data());
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    require_same_ctx(*this, o);
    return c_ == o.c_;
}

} // namespace aszeta
