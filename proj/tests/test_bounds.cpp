#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibtri/bounds.hpp"
#include "fibtri/numutil.hpp"
#include "oracles.hpp"

using namespace fibtri;

namespace {

bool inside(const CReal& x, const char* lo, const char* hi) {
    return x.lo_greater(mpq_from_decimal(lo)) && x.hi_less(mpq_from_decimal(hi));
}

bool contains_oracle(const CReal& x, const oracles::QInterval& iv) {
    return x.lo_rational() <= iv.hi && x.hi_rational() >= iv.lo &&
           x.lo_rational() >= iv.lo && x.hi_rational() <= iv.hi;
}

} // namespace

TEST_CASE("Baker-Wustholz constant") {
    // prefactor assembled differently than the library does it
    mpz_class factorial24 = 1 * 2 * 3 * 4;
    mpz_class p192form = mpz_class(192) * 192 * 192 * 192 * 192;
    CHECK(baker_wustholz_prefactor(3, 6) == 18 * factorial24 * 81 * p192form);

    CReal c36 = baker_wustholz_constant(3, 6, 1024);
    CHECK(inside(c36, "3.2717e16", "3.2719e16"));
    CHECK(inside(c36, "3.27175e16", "3.27185e16"));  // rounds to 3.2718e16
    mpq_class width = c36.width_rational();
    mpq_class rel = width / c36.lo_rational();
    CHECK(rel < mpq_class(1, 1000000));

    // C(1,1) = 18 * 2 * 1 * 32^3 * log 2, against the rational-series log
    CReal c11 = baker_wustholz_constant(1, 1, 512);
    mpz_class pref = baker_wustholz_prefactor(1, 1);
    CHECK(pref == 18 * 2 * 32768);
    auto l2 = oracles::log2_interval(80);
    CHECK(c11.lo_rational() >= pref * l2.lo);
    CHECK(c11.hi_rational() <= pref * l2.hi);

    CHECK_THROWS_AS(baker_wustholz_constant(0, 6, 64), DomainError);
}

TEST_CASE("height of sqrt5 c_alpha") {
    const auto& C = AlgebraicConstants::at(512);
    HeightResult h = height_sqrt5_calpha(C);

    auto oracle = oracles::log_interval(mpq_class(1936), 80);
    oracle.lo /= 6;
    oracle.hi /= 6;
    CHECK(contains_oracle(h.value, oracle));
    CHECK(inside(h.value, "1.2613", "1.2615"));
    CHECK(h.residual_contains_zero);

    // the minimal polynomial does not vanish at a wrong point
    CReal wrong = C.sqrt5 * CReal::from_rational(mpq_class(1, 2), 512);
    CReal bad = CReal::from_integer(mpz_class(1936), 512) * wrong.pow_int(6) -
                CReal::from_integer(mpz_class(880), 512) * wrong.pow_int(4) +
                CReal::from_integer(mpz_class(100), 512) * wrong.pow_int(2) -
                CReal::from_integer(mpz_class(125), 512);
    CHECK_FALSE(bad.contains(mpq_class(0)));
}

TEST_CASE("eta1 height bound and its minimal polynomial") {
    const auto& C = AlgebraicConstants::at(512);

    Eta1Bound b1 = eta1_height_bound(C, 1);
    CHECK(b1.chain_ok);
    CHECK(inside(b1.value, "1.2030", "1.2031"));  // (5/2) log alpha

    CHECK(eta1_height_bound(C, 271).chain_ok);

    for (long k : {1, 2, 3, 4, 5, 20}) {
        CHECK(eta1_minimal_poly_residual(C, k).contains(mpq_class(0)));
    }
    // residual at a shifted point excludes zero
    CReal eta1 = (C.alpha.pow_int(3) - CReal(1L, 512)) / C.sqrt5 +
                 CReal::from_rational(mpq_class(1, 10), 512);
    CReal res = CReal(5L, 512) * eta1.pow_int(2) -
                CReal(5L, 512) * CReal(2L, 512) * eta1 + CReal(4L, 512);
    CHECK_FALSE(res.contains(mpq_class(0)));
}

TEST_CASE("min-gap coefficient chain") {
    const auto& C = AlgebraicConstants::at(1024);
    MinGapBoundResult r = derive_min_gap_bound(C);
    CHECK(r.ok);
    CHECK(r.coefficient.is_positive());
    CHECK(r.coefficient.hi_less(mpq_class(mpz_from_scientific("2.02e15"))));

    // an inflated C(3,6) must fail the certification
    CReal inflated = CReal::from_integer(mpz_from_scientific("1e17"), 1024);
    CHECK_THROWS_AS(derive_min_gap_bound(C, PublishedBoundConstants::defaults(), inflated),
                    CoefficientExceedsPaper);
}

TEST_CASE("max-gap coefficient chain") {
    const auto& C = AlgebraicConstants::at(1024);
    CReal bw = baker_wustholz_constant(3, 6, 1024);
    MaxGapBoundResult r = derive_max_gap_bound(C, PublishedBoundConstants::defaults(), bw);
    CHECK(r.ok);
    CHECK(r.coefficient.hi_less(mpq_class(mpz_from_scientific("1.65e30"))));
    bool saw_case2 = false;
    for (const auto& chk : r.checks)
        if (chk.name == "max-gap/h1-case2") saw_case2 = chk.pass;
    CHECK(saw_case2);

    // halving the published case-1 height coefficient breaks the chain
    PublishedBoundConstants bad = PublishedBoundConstants::defaults();
    bad.h1_case1 = mpq_class(mpz_from_scientific("5.15e14"));
    CHECK_THROWS_AS(derive_max_gap_bound(C, bad, bw), CoefficientExceedsPaper);
}

TEST_CASE("global bound") {
    const auto& C = AlgebraicConstants::at(1024);
    GlobalBoundResult r = derive_global_bound(C);
    CHECK(r.ok);
    CHECK(r.bound == mpz_from_scientific("8e51"));
    CHECK(r.crossover_hi <= mpz_from_scientific("8e51"));
    CHECK(r.crossover_lo >= mpz_from_scientific("7e51"));
    CHECK(r.crossover_hi - r.crossover_lo == 1);
    for (const auto& chk : r.checks) CHECK(chk.pass);
}

TEST_CASE("fallback small-case certifications") {
    const auto& C = AlgebraicConstants::at(512);
    AbsorptionVerdict v = small_case_absorption_check(C);
    CHECK(v.all_pass);
    CHECK(v.checks.size() >= 10);
    for (const auto& chk : v.checks) CHECK(chk.pass);
}

TEST_CASE("whole chain, stable across precisions") {
    // a certification that passes must keep passing at higher precision
    for (Prec p : {512L, 1024L, 2048L}) {
        BoundsReport rep = run_bounds_chain(AlgebraicConstants::at(p));
        CHECK(rep.ok);
        CHECK(rep.error.empty());
    }
}
