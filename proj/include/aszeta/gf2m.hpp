#pragma once

#include <cstdint>
#include <vector>

namespace aszeta {

using u64 = std::uint64_t;

// Polynomials over F_2 packed LSB-first into a word: bit i is the
// coefficient of x^i.
int gf2x_degree(u64 p);
u64 gf2x_mulmod(u64 a, u64 b, u64 mod);
u64 gf2x_gcd(u64 a, u64 b);
bool gf2x_irreducible(u64 p);

// Smallest irreducible monic polynomial of the given degree over F_2,
// by ascending word value among candidates with nonzero constant term.
u64 gf2x_smallest_irreducible(unsigned deg);

// Arithmetic of F_{2^m} for 1 <= m <= 63.  Elements are packed words with
// all bits above m-1 clear; the modulus is a monic irreducible of degree m.
class Gf2m {
  public:
    explicit Gf2m(unsigned m);
    Gf2m(unsigned m, u64 modulus);

    unsigned degree() const { return m_; }
    u64 modulus() const { return mod_; }
    u64 mask() const { return mask_; }

    u64 add(u64 a, u64 b) const { return a ^ b; }

    u64 mul(u64 a, u64 b) const {
        u64 r = 0;
        const u64 top = u64(1) << m_;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top) a ^= mod_;
        }
        return r;
    }

    u64 sqr(u64 a) const { return mul(a, a); }
    u64 pow(u64 a, unsigned long long e) const;
    u64 inv(u64 a) const; // a != 0

    // a^{2^k}
    u64 frobenius(u64 a, unsigned k = 1) const;

    // Trace to F_2, as 0/1.
    int trace(u64 a) const {
        return __builtin_parityll(a & trace_mask_);
    }

    bool operator==(const Gf2m& o) const {
        return m_ == o.m_ && mod_ == o.mod_;
    }

  private:
    unsigned m_;
    u64 mod_;
    u64 mask_;
    u64 trace_mask_; // bit t set iff trace(x^t) = 1
};

} // namespace aszeta
