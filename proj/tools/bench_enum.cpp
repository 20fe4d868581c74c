// Timing comparison of the serial reference kernels against the OpenMP
// ones, on the exponential sum and the exhaustive solution count.
//
//   bench_enum [max_bits]
//
// max_bits defaults to 22 and is clamped to 26.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "aszeta/brute.hpp"
#include "aszeta/suzuki.hpp"

using namespace aszeta;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    unsigned max_bits = 22;
    if (argc > 1) max_bits = (unsigned)std::strtoul(argv[1], nullptr, 10);
    if (max_bits > 26) max_bits = 26;

    const CurveSpec spec = suzuki_curve_spec(1); // y^2 + y = x(x^4 + x^2) over F_2
    const Gf2m k = spec_field(spec);
    const AdditivePoly r = spec_poly(spec, k);
    const FieldCtxPtr base = FieldCtx::base_field(spec.m, k.modulus());

    std::printf("%6s %14s %14s %9s %8s\n", "bits", "serial sum (s)", "openmp sum (s)",
                "speedup", "equal");
    for (unsigned bits = 16; bits <= max_bits; bits += 2) {
        const FieldCtxPtr ext = FieldCtx::extension(base, bits);
        mpz_class s1, s2;
        const double t1 = seconds([&] { s1 = brute_sum_serial(ext, r); });
        const double t2 = seconds([&] { s2 = brute_sum(ext, r); });
        std::printf("%6u %14.3f %14.3f %8.1fx %8s\n", bits, t1, t2, t1 / t2,
                    s1 == s2 ? "yes" : "NO");
        if (s1 != s2) return 1;
    }

    std::printf("\n%6s %16s %18s\n", "bits", "pair loop (s)", "sorted table (s)");
    for (unsigned bits = 8; bits <= 12 && bits <= max_bits; bits += 2) {
        const FieldCtxPtr ext = FieldCtx::extension(base, bits);
        mpz_class c1, c2;
        const double t1 = seconds([&] { c1 = affine_pairs_serial(ext, r); });
        const double t2 = seconds([&] { c2 = curve_solutions(ext, r); });
        std::printf("%6u %16.3f %18.3f\n", bits, t1, t2);
        if (c1 != c2) return 1;
    }
    return 0;
}
