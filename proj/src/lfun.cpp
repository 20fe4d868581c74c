#include "aszeta/lfun.hpp"

#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "aszeta/arithfns.hpp"
#include "aszeta/check.hpp"
#include "aszeta/ratsolve.hpp"

namespace aszeta {

Gf2m spec_field(const CurveSpec& spec) {
    if (spec.a.size() < 2)
        throw input_error("the additive polynomial needs 2-degree at least 1");
    if (spec.a.back() == 0)
        throw input_error("the leading additive coefficient must be nonzero");
    if (spec.d() > kMaxTwoDegree)
        throw feasibility_error("2-degree " + std::to_string(spec.d()) +
                                " is beyond the supported bound of " +
                                std::to_string(kMaxTwoDegree));
    return spec.modulus ? Gf2m(spec.m, spec.modulus) : Gf2m(spec.m);
}

AdditivePoly spec_poly(const CurveSpec& spec, const Gf2m& k) {
    if (spec.a.size() < 2)
        throw input_error("the additive polynomial needs 2-degree at least 1");
    return AdditivePoly(k, spec.a);
}

const char* period_case_tag(PeriodCase c) {
    switch (c) {
    case PeriodCase::NegAtSplit: return "i";
    case PeriodCase::PosAtSplit: return "ii";
    case PeriodCase::ZeroThenNeg: return "iiia";
    case PeriodCase::ZeroThenPos: return "iiib";
    }
    return "?";
}

PeriodReport determine_period(const CurveSpec& spec, unsigned dim_ceiling) {
    const Gf2m k = spec_field(spec);
    const AdditivePoly R = spec_poly(spec, k);

    PeriodReport pr;
    pr.m = spec.m;
    pr.d = spec.d();

    RadicalProfile prof = radical_profile(R, spec.m);
    pr.N = prof.N;
    pr.a = prof.a;
    pr.N_odd = prof.N_odd;
    pr.divisors_2N = prof.divisors_2N;
    pr.c = prof.c;

    const unsigned long top_dim = 2ul * spec.m * pr.N;
    if (top_dim > dim_ceiling)
        throw feasibility_error("classifying the invariants needs a form of dimension " +
                                std::to_string(top_dim) + ", above the ceiling of " +
                                std::to_string(dim_ceiling));

    FieldCtxPtr base = FieldCtx::base_field(spec.m, k.modulus());
    const auto& divs = pr.divisors_2N;
    std::vector<FieldCtxPtr> ctxs(divs.size());
    for (size_t i = 0; i < divs.size(); ++i)
        ctxs[i] = FieldCtx::extension(base, (unsigned)divs[i]);

    std::vector<int> eps(divs.size(), 0);
    std::vector<unsigned> rad(divs.size(), 0);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)divs.size(); ++i) {
        try {
            const FormClass fc = classify(build_space(ctxs[i], R));
            eps[i] = fc.eps;
            rad[i] = fc.c;
        } catch (...) {
#pragma omp critical
            {
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);

    for (size_t i = 0; i < divs.size(); ++i) {
        ASZ_CHECK_MSG(rad[i] == pr.c.at(divs[i]),
                      "radical dimension from the reduction must match the gcd computation");
        pr.eps[divs[i]] = eps[i];
    }

    pr.eps_N = pr.eps.at((long)pr.N);
    pr.eps_2N = pr.eps.at(2l * pr.N);
    if (pr.eps_N == -1) {
        pr.pcase = PeriodCase::NegAtSplit;
        pr.D = pr.N;
    } else if (pr.eps_N == +1) {
        ASZ_CHECK_MSG(pr.eps_2N == -1,
                      "a positive sign at the splitting degree forces a negative one at its double");
        pr.pcase = PeriodCase::PosAtSplit;
        pr.D = 2 * pr.N;
    } else if (pr.eps_2N == -1) {
        pr.pcase = PeriodCase::ZeroThenNeg;
        pr.D = 2 * pr.N;
    } else if (pr.eps_2N == +1) {
        pr.pcase = PeriodCase::ZeroThenPos;
        pr.D = 4 * pr.N;
    } else {
        throw internal_error(
            "the invariant vanished at both the splitting degree and its double");
    }
    return pr;
}

FormClass classify_at(const CurveSpec& spec, unsigned n, unsigned dim_ceiling) {
    if (n == 0) throw input_error("extension degree must be positive");
    const Gf2m k = spec_field(spec);
    const AdditivePoly R = spec_poly(spec, k);
    const unsigned long dim = (unsigned long)spec.m * n;
    if (dim > dim_ceiling)
        throw feasibility_error("the form at this degree has dimension " + std::to_string(dim) +
                                ", above the ceiling of " + std::to_string(dim_ceiling));
    FieldCtxPtr base = FieldCtx::base_field(spec.m, k.modulus());
    return classify(build_space(FieldCtx::extension(base, n), R));
}

ZSqrt2 modified_sum_direct(const CurveSpec& spec, unsigned n, unsigned dim_ceiling) {
    const FormClass fc = classify_at(spec, n, dim_ceiling);
    if (fc.eps == 0) return ZSqrt2();
    const ZSqrt2 v = ZSqrt2::sqrt2_pow(fc.c);
    return fc.eps < 0 ? -v : v;
}

int predict_epsilon(const PeriodReport& pr, unsigned long n) {
    if (n == 0) throw input_error("extension degree must be positive");
    if (pr.m % 2 == 1 && n % 2 == 1) {
        // Odd base degree at odd n: twisted by the character mod 8.
        const unsigned long g = std::gcd(n, (unsigned long)pr.N_odd);
        const int tw = chi8((long)(n & 7)) * chi8((long)(g & 7));
        return tw * pr.eps.at((long)g);
    }
    const unsigned v = (unsigned)__builtin_ctzll(n);
    const long gN = (long)std::gcd(n, (unsigned long)pr.N);
    const long g2N = (long)std::gcd(n, 2ul * pr.N);
    switch (pr.pcase) {
    case PeriodCase::NegAtSplit:
        return pr.eps.at(gN);
    case PeriodCase::PosAtSplit:
        if (v + 1 <= pr.a) return 0;
        if (v == pr.a) return pr.eps.at(gN);
        return -pr.eps.at(gN);
    case PeriodCase::ZeroThenNeg:
        return pr.eps.at(g2N);
    case PeriodCase::ZeroThenPos:
        if (v <= pr.a) return 0;
        if (v == pr.a + 1) return pr.eps.at(g2N);
        return -pr.eps.at(g2N);
    }
    ASZ_CHECK(false);
    return 0;
}

unsigned predict_c(const PeriodReport& pr, unsigned long n) {
    if (n == 0) throw input_error("extension degree must be positive");
    return pr.c.at((long)std::gcd(n, (unsigned long)pr.N));
}

ZSqrt2 predicted_modified_sum(const PeriodReport& pr, unsigned long n) {
    const int e = predict_epsilon(pr, n);
    if (e == 0) return ZSqrt2();
    const ZSqrt2 v = ZSqrt2::sqrt2_pow(predict_c(pr, n));
    return e < 0 ? -v : v;
}

namespace {

ZSqrt2 table_sum(const PeriodReport& pr, long n) {
    ASZ_CHECK_MSG(pr.eps.count(n) && pr.c.count(n), "sum requested outside the divisor table");
    const int e = pr.eps.at(n);
    if (e == 0) return ZSqrt2();
    const ZSqrt2 v = ZSqrt2::sqrt2_pow(pr.c.at(n));
    return e < 0 ? -v : v;
}

mpq_class rational_part(const ZSqrt2& v) {
    ASZ_CHECK_MSG(v.b == 0, "expected an integer-valued sum");
    return mpq_class(v.a);
}

mpz_class integral_value(const mpq_class& v, const char* what) {
    ASZ_CHECK_MSG(v.get_den() == 1, std::string(what) + " must be an integer");
    return v.get_num();
}

// Solve 2^scale A(n0) x = rhs over the divisors of n0.
std::vector<mpq_class> solve_divisor_system(unsigned scale, const std::vector<long>& divs,
                                            const std::function<mpq_class(long)>& rhs_at) {
    const size_t t = divs.size();
    const mpz_class sc = mpz_class(1) << scale;
    std::vector<mpq_class> mat(t * t), rhs(t);
    for (size_t i = 0; i < t; ++i) {
        rhs[i] = rhs_at(divs[i]);
        for (size_t j = 0; j < t; ++j)
            mat[i * t + j] = mpq_class(ramanujan(divs[j], divs[i]) * sc);
    }
    return rat_solve(t, std::move(mat), std::move(rhs));
}

// The shared shape of the four linear systems: which index set, how the
// matrix is scaled, which sums feed the right-hand side and with which sign,
// and how a solved index maps to a root order.
struct SystemShape {
    long n0 = 0;
    unsigned scale = 0;
    long arg = 1;    // row d reads the sum at arg*d
    int sign = -1;   // rhs = sign * sum
    long target = 1; // solution column ell belongs to root order target*ell
};

SystemShape system_shape(const PeriodReport& pr) {
    SystemShape sh;
    switch (pr.pcase) {
    case PeriodCase::NegAtSplit:
        sh.n0 = pr.N;
        break;
    case PeriodCase::ZeroThenNeg:
        sh.n0 = 2l * pr.N;
        break;
    case PeriodCase::PosAtSplit:
        sh.n0 = pr.N_odd;
        sh.scale = pr.a;
        sh.arg = 1l << pr.a;
        sh.sign = +1;
        sh.target = 1l << (pr.a + 1);
        break;
    case PeriodCase::ZeroThenPos:
        sh.n0 = pr.N_odd;
        sh.scale = pr.a + 1;
        sh.arg = 1l << (pr.a + 1);
        sh.sign = +1;
        sh.target = 1l << (pr.a + 2);
        break;
    }
    return sh;
}

void check_divides_period(const PeriodReport& pr, long ell, bool nonzero) {
    if (nonzero) ASZ_CHECK_MSG(pr.D % ell == 0, "a root order must divide the period");
}

} // namespace

MultiplicitySet solve_mults_even(const PeriodReport& pr) {
    ASZ_CHECK_MSG(pr.m % 2 == 0, "this solver handles even base degrees");
    MultiplicitySet out;
    out.odd_m = false;

    const SystemShape sh = system_shape(pr);
    const auto divs = divisors(sh.n0);
    const auto x = solve_divisor_system(sh.scale, divs, [&](long dv) {
        const mpq_class v = rational_part(table_sum(pr, sh.arg * dv));
        return sh.sign < 0 ? mpq_class(-v) : v;
    });

    mpz_class degsum = 0;
    for (size_t j = 0; j < divs.size(); ++j) {
        const long ell = sh.target * divs[j];
        mpz_class mj = integral_value(x[j], "factor multiplicity");
        ASZ_CHECK_MSG(mj >= 0, "factor multiplicities must be nonnegative");
        check_divides_period(pr, ell, mj != 0);
        degsum += mj * totient(ell);
        out.plain[ell] = std::move(mj);
    }
    ASZ_CHECK_MSG(degsum == (mpz_class(1) << pr.d),
                  "factor degrees must sum to the degree of the polynomial");
    return out;
}

MultiplicitySet solve_mults_odd(const PeriodReport& pr, bool flip_anti_rhs) {
    ASZ_CHECK_MSG(pr.m % 2 == 1, "this solver handles odd base degrees");
    ASZ_CHECK_MSG(pr.a >= 1, "the splitting degree is even over an odd base degree");
    MultiplicitySet out;
    out.odd_m = true;

    // Conjugation-even layer: the same four systems, except that rows at odd
    // arguments read zero (those sums belong entirely to the other layer).
    const SystemShape sh = system_shape(pr);
    const auto divs = divisors(sh.n0);
    const auto x = solve_divisor_system(sh.scale, divs, [&](long dv) -> mpq_class {
        const long sarg = sh.arg * dv;
        if (sarg % 2) return mpq_class(0);
        const mpq_class v = rational_part(table_sum(pr, sarg));
        return sh.sign < 0 ? mpq_class(-v) : v;
    });
    std::map<long, mpq_class> half_sum;
    for (size_t j = 0; j < divs.size(); ++j) half_sum[sh.target * divs[j]] = x[j];

    // Conjugation-odd layer, supported where the order has 2-valuation
    // exactly 3; reachable only when 8 divides the period.  Dividing the
    // defining relations by sqrt(2) leaves a rational system.
    std::map<long, mpq_class> half_diff;
    if (pr.D % 8 == 0) {
        const auto odivs = divisors((long)pr.N_odd);
        const size_t t = odivs.size();
        std::vector<mpq_class> mat(t * t), rhs(t);
        for (size_t i = 0; i < t; ++i) {
            const int row_sign = chi8(odivs[i]);
            for (size_t j = 0; j < t; ++j)
                mat[i * t + j] = mpq_class(2l * row_sign * chi8(odivs[j]) *
                                           ramanujan(odivs[j], odivs[i]));
            const ZSqrt2 s = table_sum(pr, odivs[i]);
            ASZ_CHECK_MSG(s.a == 0, "odd-argument sums lie in sqrt(2)Z over an odd base degree");
            rhs[i] = mpq_class(flip_anti_rhs ? mpz_class(s.b) : mpz_class(-s.b));
        }
        const auto y = rat_solve(t, std::move(mat), std::move(rhs));
        for (size_t j = 0; j < t; ++j) half_diff[8 * odivs[j]] = y[j];

        // When the case pins every root order's 2-valuation away from 3,
        // this layer has no support; the solve must agree.
        const bool pinned_away =
            (pr.pcase == PeriodCase::PosAtSplit && pr.a + 1 != 3) ||
            (pr.pcase == PeriodCase::ZeroThenPos && pr.a + 2 != 3);
        if (pinned_away)
            for (const auto& [ell, v] : half_diff)
                ASZ_CHECK_MSG(v == 0, "the pinned valuation forbids this layer");
    } else {
        for (long dv : divisors((long)pr.N_odd))
            ASZ_CHECK_MSG(pr.eps.at(dv) == 0,
                          "odd-argument sums must vanish when 8 does not divide the period");
    }

    mpz_class degsum = 0;
    for (const auto& [ell, hs] : half_sum) {
        if (v2(ell) <= 2) {
            mpz_class mj = integral_value(hs, "factor multiplicity");
            ASZ_CHECK_MSG(mj >= 0, "factor multiplicities must be nonnegative");
            check_divides_period(pr, ell, mj != 0);
            degsum += mj * totient(ell);
            out.plain[ell] = std::move(mj);
        } else {
            const mpq_class hd = half_diff.count(ell) ? half_diff.at(ell) : mpq_class(0);
            mpz_class p = integral_value(hs + hd, "split multiplicity");
            mpz_class q = integral_value(hs - hd, "split multiplicity");
            ASZ_CHECK_MSG(p >= 0 && q >= 0, "factor multiplicities must be nonnegative");
            check_divides_period(pr, ell, p != 0 || q != 0);
            degsum += (p + q) * (totient(ell) / 2);
            out.half_sum[ell] = hs;
            out.half_diff[ell] = hd;
            out.split[ell] = {std::move(p), std::move(q)};
        }
    }
    for (const auto& [ell, v] : half_diff)
        if (!half_sum.count(ell))
            ASZ_CHECK_MSG(v == 0, "difference layer outside the solved index set");
    ASZ_CHECK_MSG(degsum == (mpz_class(1) << pr.d),
                  "factor degrees must sum to the degree of the polynomial");
    return out;
}

namespace {

unsigned long small_count(const mpz_class& v) {
    ASZ_CHECK_MSG(v.fits_ulong_p(), "multiplicity out of addressable range");
    return v.get_ui();
}

} // namespace

LFunctionReport assemble(const CurveSpec& spec, unsigned dim_ceiling, bool flip_anti_rhs) {
    LFunctionReport lf;
    lf.spec = spec;
    lf.spec.modulus = spec_field(spec).modulus();
    lf.period = determine_period(lf.spec, dim_ceiling);
    lf.mults = (spec.m % 2) ? solve_mults_odd(lf.period, flip_anti_rhs)
                            : solve_mults_even(lf.period);

    PolyZSqrt2 L = PolyZSqrt2::one();
    for (const auto& [ell, mj] : lf.mults.plain) {
        if (mj == 0) continue;
        const auto rc = cyclo_rev(ell);
        std::vector<ZSqrt2> lifted(rc.size());
        for (size_t i = 0; i < rc.size(); ++i) lifted[i] = ZSqrt2(rc[i]);
        const PolyZSqrt2 f(std::move(lifted));
        for (unsigned long i = 0, reps = small_count(mj); i < reps; ++i) L = L * f;
    }
    for (const auto& [ell, pq] : lf.mults.split) {
        if (pq.first == 0 && pq.second == 0) continue;
        const auto halves = cyclo_split(ell);
        for (unsigned long i = 0, reps = small_count(pq.first); i < reps; ++i)
            L = L * halves.first;
        for (unsigned long i = 0, reps = small_count(pq.second); i < reps; ++i)
            L = L * halves.second;
    }
    ASZ_CHECK_MSG(L.deg() == (1l << lf.period.d),
                  "the modified polynomial must have degree 2^d");
    ASZ_CHECK_MSG(L.coeff(0) == ZSqrt2(1),
                  "the modified polynomial must have constant term 1");
    lf.lstar = L;

    lf.l.resize(L.c.size());
    for (size_t kk = 0; kk < L.c.size(); ++kk) {
        const ZSqrt2& v = L.c[kk];
        const unsigned long mk = (unsigned long)spec.m * kk;
        if (mk % 2 == 0) {
            ASZ_CHECK_MSG(v.b == 0, "integer coefficients at even weight");
            lf.l[kk] = v.a << (mk / 2);
        } else {
            ASZ_CHECK_MSG(v.a == 0, "integer coefficients at odd weight");
            lf.l[kk] = v.b << ((mk + 1) / 2);
        }
    }
    return lf;
}

ZSqrt2 modified_sum(const LFunctionReport& lf, unsigned long n) {
    if (n == 0) throw input_error("extension degree must be positive");
    ASZ_CHECK_MSG(n <= (unsigned long)std::numeric_limits<long>::max(),
                  "extension degree out of range");
    const long ln = (long)n;

    // Twice the root power sum, so the half-integer layers stay integral.
    ZSqrt2 twice;
    for (const auto& [ell, mj] : lf.mults.plain)
        twice = twice + ZSqrt2(2 * mj * ramanujan(ell, ln));
    for (const auto& [ell, pq] : lf.mults.split) {
        const mpz_class sum = pq.first + pq.second;
        const mpz_class diff = pq.first - pq.second;
        twice = twice + ZSqrt2(sum * ramanujan(ell, ln));
        const ZSqrt2 sg = sigma_sum(ell, ln);
        twice = twice + ZSqrt2(diff * sg.a, diff * sg.b);
    }
    ASZ_CHECK_MSG(twice.a % 2 == 0 && twice.b % 2 == 0, "the power sum must be integral");
    return ZSqrt2(mpz_class(-twice.a / 2), mpz_class(-twice.b / 2));
}

// The weighted sums grow like 2^{mn/2}, so their bit size is the real cost;
// cap it rather than let a huge degree allocate without bound.
static constexpr unsigned long kMaxCountBits = 1ul << 26;

mpz_class curve_sum(const LFunctionReport& lf, unsigned long n) {
    if (n == 0) throw input_error("extension degree must be positive");
    const unsigned long m = lf.spec.m;
    ASZ_CHECK(m >= 1);
    if (n > kMaxCountBits / m)
        throw feasibility_error("the sum at degree " + std::to_string(n) + " has about " +
                                std::to_string(m) + "*" + std::to_string(n) +
                                "/2 bits, above the output bound");
    const ZSqrt2 s = modified_sum(lf, n);
    const unsigned long mn = m * n;
    if (mn % 2 == 0) {
        ASZ_CHECK_MSG(s.b == 0, "the dimension parity fixes the sqrt(2) part");
        return s.a << (mn / 2);
    }
    ASZ_CHECK_MSG(s.a == 0, "the dimension parity fixes the integer part");
    return s.b << ((mn + 1) / 2);
}

mpz_class point_count(const LFunctionReport& lf, unsigned long n) {
    const mpz_class s = curve_sum(lf, n);
    const unsigned long mn = (unsigned long)lf.spec.m * n;
    return 1 + (mpz_class(1) << mn) + s;
}

} // namespace aszeta
