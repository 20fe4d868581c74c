#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "aszeta/field_tower.hpp"
#include "aszeta/linearized.hpp"
#include "aszeta/quadform.hpp"
#include "aszeta/zsqrt2.hpp"

namespace aszeta {

// A curve y^2 + y = x R(x) over F_{2^m}, given by the base degree, an
// optional packed field modulus (0 selects the smallest irreducible), and
// the additive coefficients a_0..a_d of R.
struct CurveSpec {
    unsigned m = 1;
    u64 modulus = 0;
    std::vector<u64> a;

    unsigned d() const { return (unsigned)a.size() - 1; }
};

// Largest supported 2-degree of R.  The kernel polynomial has degree 4^d and
// the splitting-degree search squares polynomials of that size, so growth
// past this is refused rather than attempted.
inline constexpr unsigned kMaxTwoDegree = 6;

// Validate the curve spec and realize the base field / additive polynomial.
// Invalid data throws input_error; d beyond kMaxTwoDegree throws
// feasibility_error.
Gf2m spec_field(const CurveSpec& spec);
AdditivePoly spec_poly(const CurveSpec& spec, const Gf2m& k);

// The four period cases, keyed by the invariants at N and 2N.
enum class PeriodCase {
    NegAtSplit,  // eps_N = -1: period N
    PosAtSplit,  // eps_N = +1: period 2N, root orders of valuation v2(N)+1
    ZeroThenNeg, // eps_N = 0, eps_2N = -1: period 2N
    ZeroThenPos, // eps_N = 0, eps_2N = +1: period 4N, valuation v2(N)+2
};
const char* period_case_tag(PeriodCase c); // report tags "i","ii","iiia","iiib"

struct PeriodReport {
    unsigned m = 0, d = 0;
    unsigned N = 0;
    unsigned a = 0;      // v2(N)
    unsigned N_odd = 0;  // odd part of N
    unsigned D = 0;      // period
    PeriodCase pcase = PeriodCase::NegAtSplit;
    int eps_N = 0, eps_2N = 0;
    std::vector<long> divisors_2N;
    std::map<long, unsigned> c; // divisor of 2N -> radical dimension
    std::map<long, int> eps;    // divisor of 2N -> invariant
};

// Splitting degree, radical dimensions and invariants at every divisor of
// 2N, then the period.  The largest classified form has dimension 2mN;
// specs beyond dim_ceiling are refused with the offending dimension named.
// The per-divisor classifications run concurrently.
PeriodReport determine_period(const CurveSpec& spec, unsigned dim_ceiling = 4096);

// Classification of the trace form of one extension (dimension mn).
FormClass classify_at(const CurveSpec& spec, unsigned n, unsigned dim_ceiling = 4096);

// S_n^* = eps_n 2^{c_n/2}, by direct classification at n.
ZSqrt2 modified_sum_direct(const CurveSpec& spec, unsigned n,
                           unsigned dim_ceiling = 4096);

// eps_n for arbitrary n >= 1 from the divisor table, via the propagation
// laws (split by parity of m, and of n when m is odd).
int predict_epsilon(const PeriodReport& pr, unsigned long n);

// c_n = c(gcd(n, N)) for arbitrary n >= 1.
unsigned predict_c(const PeriodReport& pr, unsigned long n);

// S_n^* for arbitrary n from predict_epsilon/predict_c alone.
ZSqrt2 predicted_modified_sum(const PeriodReport& pr, unsigned long n);

// Multiplicities of the reversed-cyclotomic factors of the modified
// L-polynomial.  For even m (or factors with v2(l) <= 2) the factor is
// unsplit and its multiplicity lives in `plain`; for odd m and v2(l) >= 3
// the factor splits into a conjugate pair with multiplicities (plus, minus).
// The intermediate half-integer combinations are kept for reporting:
// plus = half_sum + half_diff, minus = half_sum - half_diff.
struct MultiplicitySet {
    bool odd_m = false;
    std::map<long, mpz_class> plain;
    std::map<long, std::pair<mpz_class, mpz_class>> split;
    std::map<long, mpq_class> half_sum;  // (plus+minus)/2 per split index
    std::map<long, mpq_class> half_diff; // (plus-minus)/2 per split index
};

MultiplicitySet solve_mults_even(const PeriodReport& pr);

// flip_anti_rhs negates the right-hand side of the conjugation-odd system
// (the half_diff layer).  That sign is the one delicate convention in the
// whole pipeline; the flipped variant exists so the verification command can
// demonstrate that it contradicts the brute-force sums.
MultiplicitySet solve_mults_odd(const PeriodReport& pr, bool flip_anti_rhs = false);

struct LFunctionReport {
    CurveSpec spec; // echo, with the modulus resolved
    PeriodReport period;
    MultiplicitySet mults;
    PolyZSqrt2 lstar;         // modified L-polynomial, degree 2^d
    std::vector<mpz_class> l; // L itself: l[k] = lstar[k] * sqrt2^{mk}, integral
};

LFunctionReport assemble(const CurveSpec& spec, unsigned dim_ceiling = 4096,
                         bool flip_anti_rhs = false);

// S_n^* reconstructed from the factored form: power sums of the cyclotomic
// factors are Ramanujan/sigma sums, so this is exact for arbitrary n far
// beyond enumeration or classification range.
ZSqrt2 modified_sum(const LFunctionReport& lf, unsigned long n);

// S_n = sqrt2^{mn} * S_n^* (always a rational integer).
mpz_class curve_sum(const LFunctionReport& lf, unsigned long n);

// #C(F_{2^{mn}}) = 1 + 2^{mn} + S_n.
mpz_class point_count(const LFunctionReport& lf, unsigned long n);

} // namespace aszeta
