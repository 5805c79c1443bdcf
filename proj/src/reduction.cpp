#include "fibtri/reduction.hpp"

namespace fibtri {

std::string to_string(EpsStatus s) {
    switch (s) {
        case EpsStatus::positive: return "positive";
        case EpsStatus::negative: return "negative";
        case EpsStatus::undecided: return "undecided";
    }
    return "?";
}

ReductionInstance make_instance(std::string label, Refinable tau, Refinable mu,
                                CReal A, CReal B, mpz_class M, mpz_class q) {
    if (!A.is_positive())
        throw HypothesisViolated("reduction instance '" + label + "': A > 0 not certified");
    if (!B.lo_greater(mpq_class(1)))
        throw HypothesisViolated("reduction instance '" + label + "': B > 1 not certified");
    if (M < 1)
        throw HypothesisViolated("reduction instance '" + label + "': M must be positive");
    return ReductionInstance{std::move(label), std::move(tau), std::move(mu),
                             std::move(A), std::move(B), std::move(M), std::move(q)};
}

ReductionOutcome dujella_epsilon(const ReductionInstance& inst,
                                 const PrecisionPolicy& policy) {
    if (inst.q <= 6 * inst.M)
        throw HypothesisViolated("reduction instance '" + inst.label +
                                 "': q <= 6M (q=" + inst.q.get_str() + ")");

    ReductionOutcome out;
    for (Prec p = policy.initial;; p *= policy.factor) {
        if (p > policy.max) p = policy.max;
        CReal q_enc = CReal::from_integer(inst.q, p);
        CReal m_enc = CReal::from_integer(inst.M, p);
        bool too_wide = false;
        try {
            CReal dist_tau = (inst.tau(p) * q_enc).nearest_integer_distance();
            CReal dist_mu = (inst.mu(p) * q_enc).nearest_integer_distance();
            out.epsilon = dist_mu - m_enc * dist_tau;
            out.used_prec = p;
        } catch (const TooWide&) {
            too_wide = true;
        }
        if (!too_wide) {
            if (out.epsilon.is_positive()) {
                out.status = EpsStatus::positive;
                out.k_bound = dujella_bound(inst.A, inst.B, inst.q, lower_endpoint(out.epsilon));
                return out;
            }
            if (out.epsilon.is_negative()) {
                out.status = EpsStatus::negative;
                return out;
            }
        }
        if (p >= policy.max) {
            if (too_wide)
                throw PrecisionExhausted("reduction instance '" + inst.label +
                                         "': distances too wide at max precision");
            out.status = EpsStatus::undecided;
            return out;
        }
    }
}

mpz_class dujella_bound(const CReal& A, const CReal& B, const mpz_class& q,
                        const CReal& eps_lower) {
    if (!eps_lower.is_positive())
        throw HypothesisViolated("dujella_bound requires a positive epsilon lower bound");
    Prec p = std::max<Prec>(A.precision(), 256);
    CReal threshold = (A * CReal::from_integer(q, p) / eps_lower).log() / B.log();
    // no solution with k >= threshold, so the largest surviving k is
    // ceil(threshold.hi) - 1
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(threshold.hi_ptr()));
    mpfr_ceil(t, threshold.hi_ptr());
    mpz_class bound;
    mpfr_get_z(bound.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return bound - 1;
}

mpz_class dujella_bound(const ReductionInstance& inst, const ReductionOutcome& outcome) {
    if (outcome.status != EpsStatus::positive)
        throw HypothesisViolated("dujella_bound requires a positive outcome");
    return dujella_bound(inst.A, inst.B, inst.q, lower_endpoint(outcome.epsilon));
}

CReal lower_endpoint(const CReal& x) {
    mpq_class lo = x.lo_rational();
    return CReal::from_endpoints(lo, lo, x.precision());
}

} // namespace fibtri
