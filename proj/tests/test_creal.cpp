#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibtri/constants.hpp"
#include "fibtri/creal.hpp"
#include "fibtri/numutil.hpp"
#include "fibtri/polynomial.hpp"
#include "oracles.hpp"

using namespace fibtri;

namespace {

mpq_class dec(const char* s) { return mpq_from_decimal(s); }

bool inside(const CReal& x, const char* lo, const char* hi) {
    return x.lo_greater(dec(lo)) && x.hi_less(dec(hi));
}

} // namespace

TEST_CASE("exact integer enclosures") {
    CHECK(CReal::from_integer(mpz_class(0), 64).is_exact());
    CHECK(CReal::from_integer(mpz_class(0), 64).contains(mpz_class(0)));

    CReal big = CReal::from_integer(mpz_class(121393), 64);
    CHECK(big.is_exact());
    CHECK(big.contains(mpz_class(121393)));

    CReal neg = CReal::from_integer(mpz_class(-22), 128);
    CHECK(neg.is_exact());
    CHECK(neg.contains(mpq_class(-22)));

    // integers wider than the requested precision stay exact
    mpz_class huge("669159011284129920139468279297504453112608160771671810");
    CHECK(CReal::from_integer(huge, 64).is_exact());
}

TEST_CASE("interval arithmetic basics") {
    CReal one(1L, 128), two(2L, 128);
    CHECK((one + two).contains(mpq_class(3)));

    const auto& C = AlgebraicConstants::at(256);
    CHECK((C.alpha * C.alpha - C.alpha - one).contains(mpq_class(0)));

    // log(alpha_T)/log(alpha) = 1.2663...
    CHECK(inside(C.log_alpha_T / C.log_alpha, "1.2663", "1.2664"));

    CReal straddle = CReal::from_endpoints(mpq_class(-1), mpq_class(1), 128);
    CHECK_THROWS_AS(one / straddle, DivisorStraddlesZero);
}

TEST_CASE("elementary functions") {
    CReal five(5L, 256);
    CHECK(inside(five.sqrt(), "2.2360679774", "2.2360679775"));

    const auto& C = AlgebraicConstants::at(256);
    // independent check of log(alpha) via a rational series on a rational
    // bracket of the root
    auto bracket = oracles::root_bracket({-1, -1, 1}, mpq_class(1), mpq_class(2), 200);
    auto lo = oracles::log_interval(bracket.lo, 60);
    auto hi = oracles::log_interval(bracket.hi, 60);
    CHECK(C.log_alpha.lo_rational() >= lo.lo);
    CHECK(C.log_alpha.hi_rational() <= hi.hi);
    CHECK(inside(C.log_alpha, "0.4812118", "0.4812119"));

    CReal res = C.alpha_T.pow_int(3) - C.alpha_T.pow_int(2) - C.alpha_T - CReal(1L, 256);
    CHECK(res.contains(mpq_class(0)));

    CHECK_THROWS_AS(CReal::from_endpoints(mpq_class(-1), mpq_class(1), 64).log(), DomainError);
    CHECK_THROWS_AS(CReal(-4L, 64).sqrt(), DomainError);
    CHECK_THROWS_AS(CReal(-8L, 64).nth_root(3), DomainError);

    // pow_int over straddling intervals
    CReal s = CReal::from_endpoints(mpq_class(-2), mpq_class(3), 64);
    CHECK(s.pow_int(2).contains(mpq_class(0)));
    CHECK(s.pow_int(2).contains(mpq_class(9)));
    CHECK(s.pow_int(3).contains(mpq_class(-8)));
    CHECK(s.pow_int(3).contains(mpq_class(27)));
    CHECK(C.alpha.pow_int(0).is_exact());
    CHECK((C.alpha.pow_int(-2) * C.alpha.pow_int(2)).contains(mpq_class(1)));
}

TEST_CASE("nearest integer distance") {
    CReal x = CReal::from_rational(mpq_class(9, 4), 64);  // 2.25, dyadic
    CReal d = x.nearest_integer_distance();
    CHECK(d.contains(mpq_class(1, 4)));
    CHECK(d.is_exact());

    CReal three(3L, 64);
    CHECK(three.nearest_integer_distance().contains(mpq_class(0)));

    CReal half = CReal::from_endpoints(dec("0.4999"), dec("0.5001"), 128);
    CReal dh = half.nearest_integer_distance();
    CHECK(dh.contains(mpq_class(1, 2)));
    CHECK(dh.width_rational() <= half.width_rational());

    CReal wide = CReal::from_endpoints(mpq_class(0), mpq_class(1), 64);
    CHECK_THROWS_AS(wide.nearest_integer_distance(), TooWide);
}

TEST_CASE("refine") {
    mpq_class tiny(mpz_class(1), mpz_class(1) << 400);  // ~1e-120
    CReal tau = refine(tau_refiner(), tiny);
    CHECK(tau.width_rational() <= tiny);
    CHECK(tau.precision() <= 2048);

    // zero-width input: returned unchanged at the first evaluation
    Refinable exact = [](Prec p) { return CReal::from_integer(mpz_class(7), p); };
    CHECK(refine(exact, mpq_class(0)).is_exact());

    PrecisionPolicy small{256, 1024, 2};
    CHECK_THROWS_AS(refine(tau_refiner(), mpq_class(0), small), PrecisionExhausted);
    try {
        refine(tau_refiner(), mpq_class(0), small);
    } catch (const PrecisionExhausted& e) {
        CHECK(e.achieved.width_rational() > 0);
        // both enclose the same value, so they intersect
        const CReal& coarse = AlgebraicConstants::at(256).tau;
        CHECK(!(e.achieved.certainly_less(coarse) || coarse.certainly_less(e.achieved)));
    }
}

TEST_CASE("containment soundness on random rationals") {
    std::mt19937 rng(20260808);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 100000);
    std::uniform_int_distribution<int> op(0, 3);
    std::uniform_int_distribution<int> precd(0, 2);
    const Prec precs[3] = {64, 128, 256};

    int done = 0;
    while (done < 10000) {
        mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        int o = op(rng);
        if (o == 3 && b == 0) continue;
        Prec p = precs[precd(rng)];
        CReal ca = CReal::from_rational(a, p), cb = CReal::from_rational(b, p);
        mpq_class exact;
        CReal got;
        switch (o) {
            case 0: exact = a + b; got = ca + cb; break;
            case 1: exact = a - b; got = ca - cb; break;
            case 2: exact = a * b; got = ca * cb; break;
            default: exact = a / b; got = ca / cb; break;
        }
        REQUIRE(got.contains(exact));
        ++done;
    }
}

TEST_CASE("monotone refinement") {
    for (Prec p : {256L, 512L, 1024L, 2048L}) {
        const auto& lo = AlgebraicConstants::at(p);
        const auto& hi = AlgebraicConstants::at(2 * p);
        CHECK(hi.tau.width_rational() <= lo.tau.width_rational());
        CHECK(hi.alpha_T.width_rational() <= lo.alpha_T.width_rational());
        CHECK(hi.log_alpha.width_rational() <= lo.log_alpha.width_rational());
    }
}

TEST_CASE("root isolation") {
    IntPolynomial fib({-1, -1, 1});
    CReal golden = isolate_real_root(fib, mpq_class(1), mpq_class(2), 256);
    CHECK(inside(golden, "1.6180339887", "1.6180339888"));
    CHECK(golden.width_rational() <= mpq_class(mpz_class(1), mpz_class(1) << 250));

    IntPolynomial trib({-1, -1, -1, 1});
    CReal at = isolate_real_root(trib, dec("1.8"), dec("1.9"), 256);
    CHECK(inside(at, "1.839", "1.840"));

    IntPolynomial coeff({-1, -2, 0, 44});
    CReal ca = isolate_real_root(coeff, dec("0.3"), dec("0.4"), 256);
    CHECK(inside(ca, "0.336", "0.337"));

    CHECK_THROWS_AS(isolate_real_root(fib, mpq_class(2), mpq_class(3), 128), NoSignChange);
    IntPolynomial cube({0, 0, 0, 1});
    CHECK_THROWS_AS(isolate_real_root(cube, mpq_class(-1), mpq_class(2), 128),
                    MultipleRootsSuspected);
}

TEST_CASE("decimal rendering is outward") {
    const auto& C = AlgebraicConstants::at(256);
    mpq_class lo = mpq_from_decimal(C.alpha.decimal_lo(30));
    mpq_class hi = mpq_from_decimal(C.alpha.decimal_hi(30));
    CHECK(lo <= C.alpha.lo_rational());
    CHECK(hi >= C.alpha.hi_rational());
}
