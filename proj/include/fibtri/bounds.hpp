#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fibtri/constants.hpp"

namespace fibtri {

// The published coefficients the certification chain is checked against,
// as exact rationals. Shipped as data so each checkpoint can be audited
// (and perturbed by tests) independently.
struct PublishedBoundConstants {
    mpq_class min_gap_pre;     // 2.02e15
    mpq_class min_gap_final;   // 2.03e15
    mpq_class eta1_coeff;     // 1.02e15
    mpq_class h1_case1;       // 1.03e15
    mpq_class h1_case2;       // 6.77e14
    mpq_class phi_coeff;      // 1.65e30
    mpq_class max_gap_final;   // 1.66e30
    mpq_class max_gap_slack;   // 1.67e30
    mpq_class global_coeff;    // 2.23e45
    mpz_class global_bound;    // 8e51
    long n_floor = 300;       // every certification holds for n >= n_floor

    static PublishedBoundConstants defaults();
};

// C(k,d) = 18 (k+1)! k^(k+1) (32d)^(k+2) log(2kd); the integer prefactor is
// exact, only the logarithm carries interval width.
CReal baker_wustholz_constant(unsigned k, unsigned d, Prec prec);
mpz_class baker_wustholz_prefactor(unsigned k, unsigned d);

struct HeightResult {
    CReal value;                       // (1/6) log 1936
    CReal residual;                    // minimal polynomial at sqrt(5) c_alpha
    bool residual_contains_zero = false;
};

// Modified height of sqrt(5) c_alpha, with the minimal-polynomial residual
// certified as a cross-check.
HeightResult height_sqrt5_calpha(const AlgebraicConstants& c);

struct Eta1Bound {
    CReal value;        // (1/2)(k+4) log alpha
    bool chain_ok = false;  // half log(sqrt5 (alpha^k+1)) <= half log(2 sqrt5 alpha^k) <= value
};

Eta1Bound eta1_height_bound(const AlgebraicConstants& c, long k);

// 5 X^2 - 5 F_k X - ((-1)^k + 1 - L_k) evaluated at (alpha^k - 1)/sqrt(5).
CReal eta1_minimal_poly_residual(const AlgebraicConstants& c, long k);

struct NamedCheck {
    std::string name;
    std::string statement;
    bool pass = false;
};

struct MinGapBoundResult {
    CReal coefficient;  // C(3,6) h'(a1) h'(a2) h'(a3)
    std::vector<NamedCheck> checks;
    bool ok = false;
};

// Certifies the coefficient chain behind
// min{(n-n1) log alpha, (m-m1) log alpha_T} < 2.03e15 log n.
// Throws CoefficientExceedsPaper when a checkpoint fails.
MinGapBoundResult derive_min_gap_bound(const AlgebraicConstants& c, const PublishedBoundConstants& published,
                           const CReal& bw_constant);
MinGapBoundResult derive_min_gap_bound(const AlgebraicConstants& c);

struct MaxGapBoundResult {
    CReal coefficient;  // C(3,6) * 1.03e15 * h'(a2) h'(a3)
    std::vector<NamedCheck> checks;
    bool ok = false;
};

// Certifies the chain behind
// max{(n-n1) log alpha, (m-m1) log alpha_T} < 1.66e30 (log n)^2.
MaxGapBoundResult derive_max_gap_bound(const AlgebraicConstants& c, const PublishedBoundConstants& published,
                           const CReal& bw_constant);
MaxGapBoundResult derive_max_gap_bound(const AlgebraicConstants& c);

struct GlobalBoundResult {
    mpz_class bound;          // certified: every solution has n < bound
    CReal coefficient;        // the 2.23e45 chain value
    mpz_class crossover_lo;   // f changes sign in (crossover_lo, crossover_hi]
    mpz_class crossover_hi;
    std::vector<NamedCheck> checks;
    bool ok = false;
};

// Certifies (n-4) log alpha < 2.23e45 (log n)^3 for solutions, then locates
// the crossover of f(n) = (n-4) log alpha - 2.23e45 (log n)^3 by certified
// bisection and proves f > 0 from the published bound onward.
GlobalBoundResult derive_global_bound(const AlgebraicConstants& c,
                                       const PublishedBoundConstants& published,
                                       const CReal& bw_constant,
                                       const PrecisionPolicy& policy = {});
GlobalBoundResult derive_global_bound(const AlgebraicConstants& c);

struct AbsorptionVerdict {
    std::vector<NamedCheck> checks;
    bool all_pass = false;
};

// Certifies the |Lambda| > 0.5 fallback cases: with |e^Lambda - 1| bounded
// below by e^(1/2)-1 (Lambda > 0.5) or 1 - e^(-1/2) (Lambda < -0.5), each
// inequality forces the published small-gap cases, all absorbed by the
// lemma bounds.
AbsorptionVerdict small_case_absorption_check(const AlgebraicConstants& c);

struct BoundsReport {
    CReal bw_constant;
    mpz_class bw_prefactor;
    HeightResult height;
    MinGapBoundResult min_gap;
    MaxGapBoundResult max_gap;
    GlobalBoundResult global_result;
    AbsorptionVerdict absorption;
    bool ok = false;
    std::string error;
};

BoundsReport run_bounds_chain(const AlgebraicConstants& c,
                              const PublishedBoundConstants& published = PublishedBoundConstants::defaults(),
                              const PrecisionPolicy& policy = {});

} // namespace fibtri
