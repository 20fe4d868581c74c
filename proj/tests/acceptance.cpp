// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Everything here is checked against independent oracles (enumeration,
// exact root-of-unity arithmetic) or frozen hand-derived values.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aszeta/arithfns.hpp"
#include "aszeta/brute.hpp"
#include "aszeta/commands.hpp"
#include "aszeta/lfun.hpp"
#include "aszeta/ratsolve.hpp"
#include "aszeta/spec_io.hpp"
#include "aszeta/suzuki.hpp"

using namespace aszeta;
using json = nlohmann::json;

namespace {

int g_failures = 0;

struct Check {
    bool ok = true;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
        ok = ok && cond;
    }
};

using Clock = std::chrono::steady_clock;

void report(int idx, const char* label, const Check& c, double seconds, double budget) {
    const bool timed_out = budget > 0 && seconds >= budget;
    const bool pass = c.ok && !timed_out;
    if (!pass) ++g_failures;
    std::printf("criterion %d: %s (%.2f s) %s", idx, pass ? "PASS" : "FAIL", seconds, label);
    if (!c.ok) std::printf(" -- %s", c.first_failure.c_str());
    if (timed_out) std::printf(" -- exceeded %.0f s budget", budget);
    std::printf("\n");
    std::fflush(stdout);
}

const std::vector<CurveSpec>& corpus() {
    static const std::vector<CurveSpec> specs = random_curve_specs(1, 50, {1, 2}, 3);
    return specs;
}

const std::vector<LFunctionReport>& corpus_reports() {
    static const std::vector<LFunctionReport> reports = [] {
        std::vector<LFunctionReport> r;
        r.reserve(corpus().size());
        for (const CurveSpec& s : corpus()) r.push_back(assemble(s));
        return r;
    }();
    return reports;
}

// -------------------------------------------------------------------------
// 1. Smallest family member end-to-end: analysis, multiplicities, the full
//    integral L-polynomial, and point counts against pair enumeration.
void criterion_1() {
    const auto t0 = Clock::now();
    Check c;

    const LFunctionReport lf = assemble(suzuki_curve_spec(1));
    c.expect(lf.period.N == 6, "splitting degree");
    c.expect(lf.period.D == 24, "period");
    c.expect(std::string(period_case_tag(lf.period.pcase)) == "iiib", "case tag");

    c.expect(lf.mults.plain.empty(), "no unsplit factors");
    mpz_class total = 0;
    for (const auto& [ell, pq] : lf.mults.split) {
        total += pq.first + pq.second;
        if (ell != 24) c.expect(pq.first == 0 && pq.second == 0, "stray multiplicity");
    }
    c.expect(lf.mults.split.at(24).first == 0, "plus multiplicity at 24");
    c.expect(lf.mults.split.at(24).second == 1, "minus multiplicity at 24");
    c.expect(total == 1, "exactly one factor");

    c.expect(lf.l == std::vector<mpz_class>{1, 2, 2, 4, 4}, "integral L coefficients");

    const long want[] = {5, 5, 17, 9};
    const Gf2m k = spec_field(lf.spec);
    const AdditivePoly r = spec_poly(lf.spec, k);
    const FieldCtxPtr base = FieldCtx::base_field(1);
    for (unsigned n = 1; n <= 4; ++n) {
        c.expect(point_count(lf, n) == want[n - 1], "frozen point count");
        const mpz_class brute = curve_solutions(FieldCtx::extension(base, n), r) + 1;
        c.expect(point_count(lf, n) == brute, "pair enumeration");
    }

    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(1, "family end-to-end at the smallest parameter", c, dt, 1.0);
}

// -------------------------------------------------------------------------
// 2. Family closed forms against the generic pipeline and plain search.
void criterion_2() {
    const auto t0 = Clock::now();
    Check c;

    for (unsigned h = 1; h <= 2; ++h) {
        const LFunctionReport lf = assemble(suzuki_curve_spec(h));
        for (unsigned long n = 1; n <= 100; ++n)
            c.expect(suzuki_epsilon(h, n) == predict_epsilon(lf.period, n),
                     "closed-form sign at h=" + std::to_string(h) + " n=" + std::to_string(n));
    }
    for (unsigned n = 1; n <= 4; ++n)
        c.expect(suzuki_curve_count(1, n) == suzuki_count_exhaustive(1, n),
                 "smooth-model count, n=" + std::to_string(n));

    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(2, "family closed forms", c, dt, 10.0);
}

// -------------------------------------------------------------------------
// 3. Oracle equivalence over the random corpus: classified exponential sums
//    against enumeration, pipeline point counts against solution counting.
void criterion_3() {
    const auto t0 = Clock::now();
    Check c;

    const auto& specs = corpus();
    const auto& reports = corpus_reports();
    c.expect(specs.size() >= 50, "corpus size");
    for (size_t i = 0; i < specs.size(); ++i) {
        const CurveSpec& spec = specs[i];
        const Gf2m k = spec_field(spec);
        const AdditivePoly r = spec_poly(spec, k);
        const FieldCtxPtr base = FieldCtx::base_field(spec.m, k.modulus());
        for (unsigned n = 1; spec.m * n <= 16; ++n) {
            const FieldCtxPtr ext = FieldCtx::extension(base, n);
            const FormClass f = classify(build_space(ext, r));
            c.expect(exp_sum(f, ext->abs_degree()) == brute_sum(ext, r),
                     "classified sum vs enumeration, spec " + std::to_string(i) +
                         " n=" + std::to_string(n));
            c.expect(point_count(reports[i], n) == curve_solutions(ext, r) + 1,
                     "point count vs solution count, spec " + std::to_string(i) +
                         " n=" + std::to_string(n));
        }
    }

    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(3, "oracle equivalence corpus", c, dt, 300.0);
}

// -------------------------------------------------------------------------
// 4. Structural invariants of every assembled report in the corpus.
void criterion_4() {
    const auto t0 = Clock::now();
    Check c;

    for (size_t i = 0; i < corpus_reports().size(); ++i) {
        const LFunctionReport& lf = corpus_reports()[i];
        const std::string tag = "spec " + std::to_string(i) + ": ";
        const long degree = 1l << lf.period.d;

        c.expect(lf.lstar.deg() == degree, tag + "modified polynomial degree");
        c.expect(lf.l.size() == (size_t)degree + 1, tag + "integral length");
        c.expect(lf.l[0] == 1, tag + "constant term");
        for (size_t kk = 0; kk < lf.l.size(); ++kk) {
            // integrality of L: each sqrt2-scaled coefficient is one-component
            const ZSqrt2 v = lf.lstar.coeff(kk);
            if ((lf.period.m * kk) % 2 == 0)
                c.expect(v.b == 0, tag + "even layer integral");
            else
                c.expect(v.a == 0, tag + "odd layer pure");
        }

        mpz_class degsum = 0;
        const unsigned D = lf.period.D;
        for (const auto& [ell, mult] : lf.mults.plain) {
            c.expect(mult >= 0, tag + "nonnegative multiplicity");
            if (mult > 0) c.expect(D % ell == 0, tag + "factor order divides the period");
            degsum += mult * totient(ell);
        }
        for (const auto& [ell, pq] : lf.mults.split) {
            c.expect(pq.first >= 0 && pq.second >= 0, tag + "nonnegative split pair");
            if (pq.first + pq.second > 0)
                c.expect(D % ell == 0, tag + "split order divides the period");
            degsum += (pq.first + pq.second) * (totient(ell) / 2);
        }
        c.expect(degsum == degree, tag + "multiplicity degrees sum to the L-degree");

        const unsigned N = lf.period.N;
        c.expect(D == N || D == 2 * N || D == 4 * N, tag + "period among N,2N,4N");

        // pinned dyadic valuation of every contributing order in the two
        // positive cases
        long pinned = -1;
        if (lf.period.pcase == PeriodCase::PosAtSplit) pinned = lf.period.a + 1;
        if (lf.period.pcase == PeriodCase::ZeroThenPos) pinned = lf.period.a + 2;
        if (pinned >= 0) {
            for (const auto& [ell, mult] : lf.mults.plain)
                if (mult > 0) c.expect(v2(ell) == pinned, tag + "pinned valuation");
            for (const auto& [ell, pq] : lf.mults.split)
                if (pq.first + pq.second > 0)
                    c.expect(v2(ell) == pinned, tag + "pinned split valuation");
        }
    }

    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(4, "structural invariants on the corpus", c, dt, 0);
}

// -------------------------------------------------------------------------
// 5. Arithmetic-function identities, all against exact cyclotomic sums.
void criterion_5() {
    const auto t0 = Clock::now();
    Check c;

    // determinant of the divisor matrix
    for (long n = 1; n <= 60; ++n) {
        const DivisorMatrix a = matrix_A(n);
        std::vector<mpq_class> q;
        q.reserve(a.e.size());
        for (const mpz_class& z : a.e) q.emplace_back(z);
        mpz_class want = 1;
        for (long d : a.divs) want *= d;
        c.expect(rat_det(a.dim(), q) == mpq_class(want),
                 "divisor-matrix determinant, n=" + std::to_string(n));
    }

    // closed forms versus direct root-of-unity sums
    for (long ell = 1; ell <= 120; ++ell) {
        const CycloRing ring(ell);
        const bool has_sqrt2 = ell % 8 == 0;
        for (long n = 1; n <= 120; ++n) {
            CycloRing::Elem plain = ring.zero();
            CycloRing::Elem twisted = ring.zero();
            for (long i = 1; i <= ell; ++i) {
                if (std::gcd(i, ell) != 1) continue;
                const CycloRing::Elem& t = ring.y_pow(i * n);
                plain = ring.add(plain, t);
                if (has_sqrt2) {
                    if (chi8(i) == 1)
                        twisted = ring.add(twisted, t);
                    else
                        for (size_t w = 0; w < twisted.size(); ++w) twisted[w] -= t[w];
                }
            }
            c.expect(plain == ring.from_int(ramanujan(ell, n)),
                     "unit sum, ell=" + std::to_string(ell) + " n=" + std::to_string(n));
            if (has_sqrt2) {
                const ZSqrt2 s = sigma_sum(ell, n);
                CycloRing::Elem want = ring.from_int(s.a);
                if (s.b != 0) want = ring.add(want, ring.mul(ring.from_int(s.b), ring.sqrt2()));
                c.expect(twisted == want,
                         "twisted sum, ell=" + std::to_string(ell) + " n=" + std::to_string(n));
            }
        }
    }

    // layer decomposition of the divisor matrix over the odd core
    for (long n = 1; n <= 48; ++n) {
        const DivisorMatrix whole = matrix_A(n);
        const DivisorMatrix core = matrix_A(odd_part(n));
        for (long d : whole.divs)
            for (long ell : whole.divs) {
                const int i = v2(d), j = v2(ell);
                const mpz_class base =
                    core.at(core.index_of(odd_part(d)), core.index_of(odd_part(ell)));
                mpz_class want;
                if (j == 0)
                    want = base;
                else if (j <= i)
                    want = (mpz_class(1) << (j - 1)) * base;
                else if (j == i + 1)
                    want = -(mpz_class(1) << i) * base;
                else
                    want = 0;
                c.expect(whole.at(whole.index_of(d), whole.index_of(ell)) == want,
                         "matrix layer rule, n=" + std::to_string(n));
            }
    }

    // stripe pattern of the twisted sums: nonzero only three dyadic levels
    // up, where they reproduce the sign-conjugated odd-core matrix
    for (long ncore = 1; ncore <= 47; ncore += 2) {
        const DivisorMatrix core = matrix_A(ncore);
        const std::vector<int> delta = matrix_delta(ncore);
        for (size_t di = 0; di < core.divs.size(); ++di)
            for (size_t li = 0; li < core.divs.size(); ++li)
                for (int t = 0; t <= 3; ++t)
                    for (int kk = 3; kk <= 6; ++kk) {
                        const long arg = core.divs[di] << t;
                        const long order = core.divs[li] << kk;
                        const ZSqrt2 got = sigma_sum(order, arg);
                        ZSqrt2 want;
                        if (kk == t + 3) {
                            mpz_class b = (mpz_class(1) << (t + 1)) * delta[di] * delta[li];
                            b *= core.at(di, li);
                            want = ZSqrt2(0, b);
                        }
                        c.expect(got == want, "twisted stripe, core=" + std::to_string(ncore));
                    }
    }

    // character split of the reversed cyclotomic polynomials
    for (long ell = 8; ell <= 120; ell += 8) {
        const auto [plus, minus] = cyclo_split(ell);
        c.expect(plus.conj() == minus, "conjugation swaps the halves, ell=" + std::to_string(ell));
        std::vector<ZSqrt2> lift;
        for (const mpz_class& z : cyclo_rev(ell)) lift.emplace_back(z);
        c.expect(plus * minus == PolyZSqrt2(std::move(lift)),
                 "halves multiply back, ell=" + std::to_string(ell));
    }

    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(5, "arithmetic-function identities", c, dt, 30.0);
}

// -------------------------------------------------------------------------
// 6. Propagation laws against direct classification on every corpus spec.
void criterion_6() {
    const auto t0 = Clock::now();
    Check c;

    const unsigned ceiling = 192;
    for (size_t i = 0; i < corpus().size(); ++i) {
        const CurveSpec& spec = corpus()[i];
        const PeriodReport& pr = corpus_reports()[i].period;
        const unsigned long n_hi =
            std::min<unsigned long>(3ul * pr.D, ceiling / spec.m);
        for (unsigned long n = 1; n <= n_hi; ++n) {
            const FormClass f = classify_at(spec, (unsigned)n, ceiling);
            c.expect(predict_epsilon(pr, n) == f.eps, "predicted sign, spec " +
                                                          std::to_string(i) +
                                                          " n=" + std::to_string(n));
            c.expect(predict_c(pr, n) == f.c, "predicted radical dimension, spec " +
                                                  std::to_string(i) +
                                                  " n=" + std::to_string(n));
        }
    }

    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(6, "propagation laws on the corpus", c, dt, 0);
}

// -------------------------------------------------------------------------
// 7. Sign resolution: the adopted convention reproduces enumeration at the
//    witness degree, the flipped one contradicts it, and the verification
//    report records all of it.
void criterion_7() {
    const auto t0 = Clock::now();
    Check c;

    const CurveSpec spec = suzuki_curve_spec(1);
    const std::string path = "/tmp/aszeta_acceptance_suz1.json";
    {
        std::ofstream out(path);
        out << emit_curve_spec(spec);
    }
    VerifyOptions opt;
    opt.brute_bound = 16;
    std::ostringstream out, err;
    const int code = cmd_verify(path, opt, out, err);
    c.expect(code == 0, "verification exit code");

    const json j = json::parse(out.str());
    c.expect(j["pass"] == true, "overall verification verdict");
    bool found = false;
    for (const auto& chk : j["checks"]) {
        if (chk["name"] != "sign-convention-demonstration") continue;
        found = true;
        c.expect(chk["pass"] == true, "sign check verdict");
        c.expect(!chk.contains("skipped"), "the check actually ran");
        c.expect(chk.contains("witness_n"), "a witness degree exists");
        c.expect(chk["oracle"] == "enumeration", "the witness is grounded in enumeration");
        c.expect(chk.contains("convention") && !chk["convention"].get<std::string>().empty(),
                 "the adopted convention is documented");
    }
    c.expect(found, "sign check present");

    // and directly: the two conventions disagree already at degree 1, where
    // exhaustive enumeration decides
    const LFunctionReport standard = assemble(spec);
    const LFunctionReport flipped = assemble(spec, 4096, true);
    c.expect(curve_sum(standard, 1) == 2, "adopted sign matches enumeration");
    c.expect(curve_sum(flipped, 1) == -2, "flipped sign contradicts enumeration");

    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(7, "sign resolution record", c, dt, 0);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    else std::printf("all 7 criteria passed\n");
    return g_failures ? 1 : 0;
}
