#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aszeta/arithfns.hpp"
#include "aszeta/check.hpp"
#include "aszeta/zsqrt2.hpp"

using namespace aszeta;

TEST_CASE("quadratic integer arithmetic") {
    const ZSqrt2 u(1, 1), v(1, -1);
    CHECK(u * v == ZSqrt2(-1));  // (1+s)(1-s) = -1
    CHECK(u + v == ZSqrt2(2));
    CHECK(u.conj() == v);
    CHECK((u * u).conj() == v * v);
    CHECK(u.times_sqrt2() == ZSqrt2(2, 1));
    CHECK(ZSqrt2::sqrt2_pow(0) == ZSqrt2(1));
    CHECK(ZSqrt2::sqrt2_pow(1) == ZSqrt2(0, 1));
    CHECK(ZSqrt2::sqrt2_pow(2) == ZSqrt2(2));
    CHECK(ZSqrt2::sqrt2_pow(3) == ZSqrt2(0, 2));
    CHECK(ZSqrt2::sqrt2_pow(4) == ZSqrt2(4));
    CHECK(ZSqrt2::sqrt2_pow(5) == ZSqrt2(0, 4));
    CHECK(ZSqrt2(3).is_integer());
    CHECK(!ZSqrt2(3, 1).is_integer());
    CHECK(ZSqrt2(0, 0).is_zero());
    CHECK(ZSqrt2(2, -1).str() == "2-sqrt2");
    CHECK(ZSqrt2(-5).str() == "-5");
}

TEST_CASE("polynomials over the quadratic ring") {
    const PolyZSqrt2 p({ZSqrt2(1), ZSqrt2(0, 1)});       // 1 + s T
    const PolyZSqrt2 q({ZSqrt2(1), ZSqrt2(0, -1)});      // 1 - s T
    const PolyZSqrt2 pr = p * q;
    CHECK(pr.deg() == 2);
    CHECK(pr.coeff(0) == ZSqrt2(1));
    CHECK(pr.coeff(1) == ZSqrt2(0));
    CHECK(pr.coeff(2) == ZSqrt2(-2));
    CHECK(p.conj() == q);
    CHECK(pr.is_integer());
    CHECK(!p.is_integer());
    // trimming
    CHECK(PolyZSqrt2({ZSqrt2(1), ZSqrt2(0)}).deg() == 0);
    CHECK(PolyZSqrt2::one().deg() == 0);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclo(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclo(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclo(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclo(8) == std::vector<mpz_class>{1, 0, 0, 0, 1});
    CHECK(cyclo(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(cyclo(24) == std::vector<mpz_class>{1, 0, 0, 0, -1, 0, 0, 0, 1});
    CHECK(cyclo_rev(1) == std::vector<mpz_class>{1, -1});
    CHECK(cyclo_rev(2) == std::vector<mpz_class>{1, 1});
    // prod over all ell-th roots of (1 - zeta T) = 1 - T^ell, checked via
    // multiplying cyclo_rev over divisors
    for (long ell : {6l, 8l, 12l}) {
        PolyZSqrt2 prod = PolyZSqrt2::one();
        for (long d : divisors(ell)) {
            std::vector<ZSqrt2> lift;
            for (const mpz_class& z : cyclo_rev(d)) lift.emplace_back(z);
            prod = prod * PolyZSqrt2(std::move(lift));
        }
        CHECK(prod.deg() == (int)ell);
        CHECK(prod.coeff(0) == ZSqrt2(1));
        CHECK(prod.coeff((size_t)ell) == ZSqrt2(-1));
        for (long i = 1; i < ell; ++i) CHECK(prod.coeff((size_t)i) == ZSqrt2(0));
    }
}

TEST_CASE("cyclotomic ring arithmetic") {
    const CycloRing ring(8);
    CHECK(ring.dim() == 4);
    // y^4 = -1
    const CycloRing::Elem y4 = ring.y_pow(4);
    CHECK(y4 == ring.from_int(-1));
    // y^8 = 1
    CHECK(ring.y_pow(8) == ring.from_int(1));
    // sqrt2 = y + y^7 squares to 2 (checked internally); export it
    ZSqrt2 s;
    REQUIRE(ring.to_zsqrt2(ring.sqrt2(), s));
    CHECK(s == ZSqrt2(0, 1));
    // y itself is not in Z[sqrt2]
    CHECK(!ring.to_zsqrt2(ring.y_pow(1), s));
    // mul_y_pow agrees with mul
    const CycloRing::Elem x = ring.add(ring.y_pow(2), ring.from_int(3));
    CHECK(ring.mul_y_pow(x, 5) == ring.mul(x, ring.y_pow(5)));
}

TEST_CASE("splitting a cyclotomic polynomial by the character mod 8") {
    const auto [plus8, minus8] = cyclo_split(8);
    // orbit of residues 1,7 (chi = +1): (1 - yT)(1 - y^7 T) = 1 - sqrt2 T + T^2
    CHECK(plus8 == PolyZSqrt2({ZSqrt2(1), ZSqrt2(0, -1), ZSqrt2(1)}));
    CHECK(minus8 == PolyZSqrt2({ZSqrt2(1), ZSqrt2(0, 1), ZSqrt2(1)}));

    const auto [plus24, minus24] = cyclo_split(24);
    CHECK(minus24 ==
          PolyZSqrt2({ZSqrt2(1), ZSqrt2(0, 1), ZSqrt2(1), ZSqrt2(0, 1), ZSqrt2(1)}));
    CHECK(plus24 ==
          PolyZSqrt2({ZSqrt2(1), ZSqrt2(0, -1), ZSqrt2(1), ZSqrt2(0, -1), ZSqrt2(1)}));
}

TEST_CASE("split halves: conjugation, product, and linear coefficient") {
    for (long ell : {8l, 16l, 24l, 40l, 48l, 120l}) {
        const auto [plus, minus] = cyclo_split(ell);
        CHECK(plus.conj() == minus);
        CHECK(plus.deg() == (int)totient(ell) / 2);
        // product is the full reversed cyclotomic polynomial
        std::vector<ZSqrt2> lift;
        for (const mpz_class& z : cyclo_rev(ell)) lift.emplace_back(z);
        CHECK(plus * minus == PolyZSqrt2(std::move(lift)));
        // linear coefficient: -(coeff of T) = (c_ell(1) +- sigma_ell(1)) / 2
        const ZSqrt2 want_p = ZSqrt2(ramanujan(ell, 1)) + sigma_sum(ell, 1);
        CHECK((-(plus.coeff(1)) + -(plus.coeff(1))) == want_p);
        const ZSqrt2 want_m = ZSqrt2(ramanujan(ell, 1)) - sigma_sum(ell, 1);
        CHECK((-(minus.coeff(1)) + -(minus.coeff(1))) == want_m);
    }
}
