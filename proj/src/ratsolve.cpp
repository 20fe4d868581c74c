#include "aszeta/ratsolve.hpp"

#include "aszeta/check.hpp"

namespace aszeta {

namespace {

// Forward elimination to row echelon form; returns the determinant.  `rhs`
// may be null (determinant only).
mpq_class eliminate(size_t n, std::vector<mpq_class>& a, std::vector<mpq_class>* rhs) {
    mpq_class det = 1;
    auto at = [&](size_t r, size_t c) -> mpq_class& { return a[r * n + c]; };
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (size_t c = col; c < n; ++c) std::swap(at(piv, c), at(col, c));
            if (rhs) std::swap((*rhs)[piv], (*rhs)[col]);
            det = -det;
        }
        det *= at(col, col);
        for (size_t r = col + 1; r < n; ++r) {
            if (at(r, col) == 0) continue;
            mpq_class f = at(r, col) / at(col, col);
            at(r, col) = 0;
            for (size_t c = col + 1; c < n; ++c) at(r, c) -= f * at(col, c);
            if (rhs) (*rhs)[r] -= f * (*rhs)[col];
        }
    }
    return det;
}

} // namespace

std::vector<mpq_class> rat_solve(size_t n, std::vector<mpq_class> a,
                                 std::vector<mpq_class> rhs) {
    ASZ_CHECK(a.size() == n * n && rhs.size() == n);
    mpq_class det = eliminate(n, a, &rhs);
    ASZ_CHECK_MSG(det != 0, "singular system");
    std::vector<mpq_class> x(n);
    for (size_t r = n; r-- > 0;) {
        mpq_class s = rhs[r];
        for (size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
        x[r] = s / a[r * n + r];
    }
    return x;
}

mpq_class rat_det(size_t n, std::vector<mpq_class> a) {
    ASZ_CHECK(a.size() == n * n);
    return eliminate(n, a, nullptr);
}

} // namespace aszeta
