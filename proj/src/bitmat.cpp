#include "aszeta/bitmat.hpp"

#include "aszeta/check.hpp"

namespace aszeta {

BitMat BitMat::transposed() const {
    BitMat t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        const u64* p = row(r);
        for (size_t w = 0; w < rw_; ++w) {
            u64 bits = p[w];
            while (bits) {
                const size_t c = w * 64 + (size_t)__builtin_ctzll(bits);
                bits &= bits - 1;
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitMat BitMat::mul(const BitMat& o) const {
    ASZ_CHECK(cols_ == o.rows_);
    BitMat out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        const u64* p = row(r);
        for (size_t w = 0; w < rw_; ++w) {
            u64 bits = p[w];
            while (bits) {
                const size_t s = w * 64 + (size_t)__builtin_ctzll(bits);
                bits &= bits - 1;
                out.xor_row_from(r, o.row(s));
            }
        }
    }
    return out;
}

int bit_dot(const u64* a, const u64* b, size_t words) {
    u64 acc = 0;
    for (size_t i = 0; i < words; ++i) acc ^= a[i] & b[i];
    return __builtin_parityll(acc);
}

} // namespace aszeta
