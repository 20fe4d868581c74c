#pragma once

#include <cstddef>
#include <vector>

#include "aszeta/gf2m.hpp"

namespace aszeta {

// Dense matrix over F_2, rows packed LSB-first into 64-bit words.
class BitMat {
  public:
    BitMat() = default;
    BitMat(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), rw_((cols + 63) / 64), w_(rows * rw_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t row_words() const { return rw_; }

    u64* row(size_t r) { return w_.data() + r * rw_; }
    const u64* row(size_t r) const { return w_.data() + r * rw_; }

    bool get(size_t r, size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1; }
    void set(size_t r, size_t c, bool v) {
        u64& w = row(r)[c / 64];
        w = v ? (w | (u64(1) << (c % 64))) : (w & ~(u64(1) << (c % 64)));
    }
    void flip(size_t r, size_t c) { row(r)[c / 64] ^= u64(1) << (c % 64); }

    void xor_row(size_t dst, size_t src) {
        u64* d = row(dst);
        const u64* s = row(src);
        for (size_t i = 0; i < rw_; ++i) d[i] ^= s[i];
    }

    void xor_row_from(size_t dst, const u64* src) {
        u64* d = row(dst);
        for (size_t i = 0; i < rw_; ++i) d[i] ^= src[i];
    }

    bool row_zero(size_t r) const {
        const u64* p = row(r);
        for (size_t i = 0; i < rw_; ++i)
            if (p[i]) return false;
        return true;
    }

    BitMat transposed() const;

    // this * o over F_2
    BitMat mul(const BitMat& o) const;

    bool operator==(const BitMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

  private:
    size_t rows_ = 0, cols_ = 0, rw_ = 0;
    std::vector<u64> w_;
};

// Parity of the dot product of two packed bit vectors of `words` words.
int bit_dot(const u64* a, const u64* b, size_t words);

} // namespace aszeta
