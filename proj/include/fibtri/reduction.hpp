#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "fibtri/creal.hpp"

namespace fibtri {

// One application of the reduction lemma: certified epsilon = ||mu q|| -
// M ||tau q|| for a convergent denominator q > 6M, and the bound
// k < log(A q / eps) / log B that a positive epsilon buys.
struct ReductionInstance {
    std::string label;
    Refinable tau;
    Refinable mu;
    CReal A;  // > 0, certified at construction
    CReal B;  // > 1, certified at construction
    mpz_class M;
    mpz_class q;
};

// Validates A > 0, B > 1 and M >= 1 (HypothesisViolated otherwise).
ReductionInstance make_instance(std::string label, Refinable tau, Refinable mu,
                                CReal A, CReal B, mpz_class M, mpz_class q);

enum class EpsStatus { positive, negative, undecided };

std::string to_string(EpsStatus s);

struct ReductionOutcome {
    EpsStatus status = EpsStatus::undecided;
    CReal epsilon;          // enclosure of the true epsilon
    Prec used_prec = 0;
    std::optional<mpz_class> k_bound;  // largest k not excluded (positive case)
};

// Certified epsilon with the sign decided one-sidedly: positive only from
// epsilon.lo > 0, negative only from epsilon.hi < 0. Escalates the working
// precision until the sign is decided or the policy maximum is reached.
// Checks q > 6M exactly first (HypothesisViolated).
ReductionOutcome dujella_epsilon(const ReductionInstance& inst,
                                 const PrecisionPolicy& policy = {});

// Largest integer k NOT excluded by the lemma when the true epsilon is at
// least eps_lower: ceil(upper bound of log(A q / eps_lower)/log B) - 1,
// rounded outward so the bound stays valid.
mpz_class dujella_bound(const CReal& A, const CReal& B, const mpz_class& q,
                        const CReal& eps_lower);

// Convenience overload reading A, B, q from the instance and the certified
// epsilon lower bound from a positive outcome.
mpz_class dujella_bound(const ReductionInstance& inst, const ReductionOutcome& outcome);

// Zero-width CReal at the lower endpoint of an enclosure.
CReal lower_endpoint(const CReal& x);

} // namespace fibtri
