#pragma once

#include <memory>
#include <vector>

#include <gmpxx.h>

#include "aszeta/gf2m.hpp"

namespace aszeta {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// A two-level tower F_2 ⊂ F_{2^m} ⊂ F_{2^{mn}}.  A context is either the
// base level (wrapping Gf2m) or a one-step extension of degree n over a base
// context; extensions of extensions are not formed.  Elements are coefficient
// vectors of length n over the base, constant coefficient first (a base
// context behaves as the degenerate case n = 1).
//
// Contexts are immutable once built and safe to share across threads.
class FieldCtx {
  public:
    // Base level.  Without an explicit modulus the smallest irreducible of
    // degree m is chosen, so construction is reproducible.
    static FieldCtxPtr base_field(unsigned m);
    static FieldCtxPtr base_field(unsigned m, u64 modulus);

    // Degree-n extension of a base-level context.  Without an explicit
    // modulus the smallest monic irreducible of degree n over the base is
    // chosen (memoized per (m, base modulus, n)).
    static FieldCtxPtr extension(FieldCtxPtr base, unsigned n);
    static FieldCtxPtr extension(FieldCtxPtr base, unsigned n, std::vector<u64> modulus);

    bool is_base() const { return base_ == nullptr; }
    const Gf2m& base() const { return k_; }
    FieldCtxPtr base_ctx() const { return base_; }
    unsigned m() const { return k_.degree(); }
    unsigned n() const { return n_; }
    unsigned abs_degree() const { return k_.degree() * n_; }
    const std::vector<u64>& ext_modulus() const { return modulus_; }
    mpz_class order() const; // 2^{mn}

    size_t words() const { return n_; }
    size_t bit_words() const { return (abs_degree() + 63) / 64; }

    bool same_as(const FieldCtx& o) const;

    // Arithmetic on raw coefficient buffers of length words().  Output may
    // alias the inputs.
    void set_zero(u64* out) const;
    void set_one(u64* out) const;
    void set_base(u64 a, u64* out) const; // constant embedding
    void add(const u64* a, const u64* b, u64* out) const;
    void mul(const u64* a, const u64* b, u64* out) const;
    void sqr(const u64* a, u64* out) const;
    void pow(const u64* a, const mpz_class& e, u64* out) const;
    void frobenius_base(const u64* a, u64* out) const; // x ↦ x^{2^m}
    void scalar_mul(u64 a, const u64* x, u64* out) const;
    bool is_zero(const u64* a) const;

    // Trace to the base field, via precomputed traces of the power basis.
    u64 rel_trace(const u64* a) const;
    // Trace to F_2 as 0/1, via the packed linear functional.
    int abs_trace(const u64* a) const;

    // F_2-coordinate packing: mn bits, coefficient s of the power basis
    // occupying bits [s*m, (s+1)*m).  Buffers of bit_words() words.
    void pack_bits(const u64* x, u64* out) const;
    void unpack_bits(const u64* bits, u64* x) const;

    // Relative trace of u^s for s < n (u = the adjoined power-basis root).
    u64 power_trace(size_t s) const { return tau_[s]; }

  private:
    FieldCtx(Gf2m k, FieldCtxPtr base, unsigned n, std::vector<u64> modulus);
    void build_tables();

    Gf2m k_;
    FieldCtxPtr base_; // null at base level
    unsigned n_;
    std::vector<u64> modulus_;           // n+1 words, monic; empty at base level
    std::vector<std::vector<u64>> u2pow_; // u^{2s} mod modulus, s < n
    std::vector<u64> tau_;                // rel_trace(u^s), s < n
    std::vector<u64> abs_mask_;           // packed absolute-trace functional
};

// Convenience value type over a shared context.
class FieldElem {
  public:
    FieldElem() = default;
    explicit FieldElem(FieldCtxPtr ctx) : ctx_(std::move(ctx)), c_(ctx_->words(), 0) {}
    FieldElem(FieldCtxPtr ctx, std::vector<u64> coeffs);

    static FieldElem one(FieldCtxPtr ctx);
    static FieldElem from_base(FieldCtxPtr ctx, u64 a);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<u64>& coeffs() const { return c_; }
    u64* data() { return c_.data(); }
    const u64* data() const { return c_.data(); }
    bool is_zero() const { return ctx_->is_zero(c_.data()); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem sqr() const;
    FieldElem pow(const mpz_class& e) const;
    FieldElem frobenius_base() const;
    u64 rel_trace() const { return ctx_->rel_trace(c_.data()); }
    int abs_trace() const { return ctx_->abs_trace(c_.data()); }

    bool operator==(const FieldElem& o) const;

  private:
    FieldCtxPtr ctx_;
    std::vector<u64> c_;
};

void require_same_ctx(const FieldElem& a, const FieldElem& b);

} // namespace aszeta
