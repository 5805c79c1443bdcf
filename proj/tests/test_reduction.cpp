#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibtri/campaign.hpp"
#include "fibtri/constants.hpp"
#include "fibtri/contfrac.hpp"
#include "fibtri/numutil.hpp"
#include "fibtri/reduction.hpp"
#include "oracles.hpp"

using namespace fibtri;

namespace {

Refinable rational_refiner(const mpq_class& x) {
    return [x](Prec p) { return CReal::from_rational(x, p); };
}

Refinable mu_stage0_pos() {
    return [](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        return (CReal(1L, p) / C.sqrt5_c_alpha).log() / C.log_alpha_T;
    };
}

Refinable mu_stage2_pos(long k) {
    return [k](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        CReal den = C.sqrt5_c_alpha * (C.alpha_T.pow_int(k) - CReal(1L, p));
        return (CReal(1L, p) / den).log() / C.log_alpha_T;
    };
}

} // namespace

TEST_CASE("stage-0 instance reproduces the published epsilon and bounds") {
    Prec p = 1024;
    const auto& C = AlgebraicConstants::at(p);
    mpz_class M = mpz_from_scientific("8e51");
    Convergent c104 = convergent_at(tau_refiner(), 104);

    ReductionInstance inst = make_instance(
        "stage0", tau_refiner(), mu_stage0_pos(),
        CReal::from_integer(mpz_class(48), p), C.alpha, M, c104.q);
    ReductionOutcome out = dujella_epsilon(inst);
    REQUIRE(out.status == EpsStatus::positive);
    CHECK(out.epsilon.lo_greater(mpq_from_decimal("0.068")));
    CHECK(out.epsilon.hi_less(mpq_from_decimal("0.069")));

    CReal thr = CReal::from_rational(mpq_from_decimal("0.068"), p);
    CHECK(dujella_bound(CReal::from_integer(mpz_class(48), p), C.alpha, c104.q, thr) == 271);
    CHECK(dujella_bound(CReal::from_integer(mpz_class(19), p), C.alpha_T, c104.q, thr) == 212);
}

TEST_CASE("stage-2 k=90: negative at the 104th convergent, rescued at the 105th") {
    Prec p = 1024;
    const auto& C = AlgebraicConstants::at(p);
    mpz_class M = mpz_from_scientific("8e51");
    Convergent c104 = convergent_at(tau_refiner(), 104);
    Convergent c105 = convergent_at(tau_refiner(), 105);
    CReal A50 = CReal::from_integer(mpz_class(50), p);

    ReductionOutcome base = dujella_epsilon(
        make_instance("k90/q104", tau_refiner(), mu_stage2_pos(90), A50, C.alpha, M, c104.q));
    CHECK(base.status == EpsStatus::negative);

    ReductionOutcome rescued = dujella_epsilon(
        make_instance("k90/q105", tau_refiner(), mu_stage2_pos(90), A50, C.alpha, M, c105.q));
    REQUIRE(rescued.status == EpsStatus::positive);
    CHECK(rescued.epsilon.lo_greater(mpq_from_decimal("0.46")));

    // n - n1 < log(50 q105 / 0.46)/log(alpha) < 275
    CReal thr = CReal::from_rational(mpq_from_decimal("0.46"), p);
    CHECK(dujella_bound(A50, C.alpha, c105.q, thr) == 274);
}

TEST_CASE("published bound arithmetic") {
    Prec p = 1024;
    const auto& C = AlgebraicConstants::at(p);
    Convergent c105 = convergent_at(tau_refiner(), 105);
    CReal thr = CReal::from_rational(mpq_from_decimal("0.0018"), p);
    CHECK(dujella_bound(CReal::from_integer(mpz_class(37), p), C.alpha, c105.q, thr) == 285);
}

TEST_CASE("hypothesis checks") {
    Prec p = 256;
    const auto& C = AlgebraicConstants::at(p);
    mpz_class M(100), q_small(600);

    CHECK_THROWS_AS(make_instance("badA", tau_refiner(), mu_stage0_pos(),
                                  CReal(0L, p), C.alpha, M, q_small),
                    HypothesisViolated);
    CHECK_THROWS_AS(make_instance("badB", tau_refiner(), mu_stage0_pos(),
                                  CReal(1L, p), CReal(1L, p), M, q_small),
                    HypothesisViolated);

    // q <= 6M rejected at evaluation time
    ReductionInstance inst = make_instance("badq", tau_refiner(), mu_stage0_pos(),
                                           CReal(1L, p), C.alpha, M, q_small);
    CHECK_THROWS_AS(dujella_epsilon(inst), HypothesisViolated);
}

TEST_CASE("precision exhaustion and exact-zero epsilon") {
    const auto& C = AlgebraicConstants::at(256);
    mpz_class M = mpz_from_scientific("8e51");
    Convergent c104 = convergent_at(tau_refiner(), 104);
    ReductionInstance inst = make_instance("capped", tau_refiner(), mu_stage0_pos(),
                                           CReal(1L, 64), C.alpha, M, c104.q);
    PrecisionPolicy capped{64, 64, 2};
    CHECK_THROWS_AS(dujella_epsilon(inst, capped), PrecisionExhausted);

    // tau = 1/10, mu = 3/10, q = 10: both distances are exactly zero, so
    // epsilon is exactly zero and the sign is undecidable at any precision
    ReductionInstance zero = make_instance(
        "zero", rational_refiner(mpq_class(1, 10)), rational_refiner(mpq_class(3, 10)),
        CReal(1L, 256), C.alpha, mpz_class(1), mpz_class(10));
    PrecisionPolicy quick{64, 512, 2};
    ReductionOutcome out = dujella_epsilon(zero, quick);
    CHECK(out.status == EpsStatus::undecided);
    CHECK(out.epsilon.contains(mpq_class(0)));
}

TEST_CASE("bound is monotone in epsilon") {
    Prec p = 512;
    const auto& C = AlgebraicConstants::at(p);
    Convergent c104 = convergent_at(tau_refiner(), 104);
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(1, 999);
    for (int i = 0; i < 200; ++i) {
        mpq_class e1(num(rng), 1000000), e2(num(rng), 1000000);
        e1.canonicalize();
        e2.canonicalize();
        if (e1 > e2) std::swap(e1, e2);
        mpz_class b1 = dujella_bound(CReal::from_integer(mpz_class(48), p), C.alpha, c104.q,
                                     CReal::from_rational(e1, p));
        mpz_class b2 = dujella_bound(CReal::from_integer(mpz_class(48), p), C.alpha, c104.q,
                                     CReal::from_rational(e2, p));
        CHECK(b1 >= b2);
    }
}

TEST_CASE("lemma exclusions agree with direct enumeration on toy instances") {
    std::mt19937 rng(20260101);
    std::uniform_int_distribution<long> den_tau(400, 5000);
    std::uniform_int_distribution<long> den_mu(50, 500);
    std::uniform_int_distribution<long> a_choice(1, 4);
    std::uniform_int_distribution<int> b_choice(0, 2);
    std::uniform_int_distribution<long> m_choice(5, 50);
    const mpq_class b_values[3] = {mpq_class(3, 2), mpq_class(2), mpq_class(3)};

    int certified = 0, tried = 0;
    while (certified < 100 && tried < 2000) {
        ++tried;
        long tb = den_tau(rng);
        std::uniform_int_distribution<long> tnum(1, tb - 1);
        mpq_class tau(tnum(rng), tb);
        tau.canonicalize();
        long mb = den_mu(rng);
        std::uniform_int_distribution<long> mnum(1, mb - 1);
        mpq_class mu(mnum(rng), mb);
        mu.canonicalize();
        mpq_class A(a_choice(rng));
        mpq_class B = b_values[b_choice(rng)];
        long M = m_choice(rng);

        // convergent denominator q > 6M from the exact expansion
        auto conv = oracles::cf_convergents(oracles::euclid_cf(tau));
        mpz_class q(0);
        for (const auto& [cp, cq] : conv)
            if (cq > 6 * M) { q = cq; break; }
        if (q == 0) continue;  // canonicalization shrank the denominator

        Prec p = 256;
        ReductionInstance inst = make_instance(
            "toy", rational_refiner(tau), rational_refiner(mu),
            CReal::from_rational(A, p), CReal::from_rational(B, p), mpz_class(M), q);
        PrecisionPolicy quick{256, 4096, 2};
        ReductionOutcome out = dujella_epsilon(inst, quick);
        if (out.status != EpsStatus::positive) continue;

        REQUIRE(out.epsilon.lo_rational() > 0);  // one-sided soundness
        REQUIRE(out.k_bound.has_value());
        mpz_class k0 = *out.k_bound + 1;  // smallest excluded k
        REQUIRE(k0 > 0);
        REQUIRE(k0 < 100000);
        CHECK(oracles::dujella_enumeration_holds(tau, mu, A, B, M, k0.get_si()));
        ++certified;
    }
    REQUIRE(certified >= 100);
}
