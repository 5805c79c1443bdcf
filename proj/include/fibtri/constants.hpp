#pragma once

#include "fibtri/creal.hpp"

namespace fibtri {

// Certified enclosures of every algebraic constant the verification uses.
// The real roots come from interval bisection on the integer characteristic
// polynomials; the complex pairs are carried by modulus only (|beta_T| =
// |gamma_T| and |c_beta| = |c_gamma|), which is all the inequalities need.
struct AlgebraicConstants {
    Prec prec;

    CReal sqrt5;
    CReal alpha;        // root of x^2 - x - 1 in (1, 2)
    CReal beta;         // root of x^2 - x - 1 in (-1, 0)
    CReal alpha_T;      // root of x^3 - x^2 - x - 1 in (1.8, 1.9)
    CReal beta_T_abs;   // = alpha_T^{-1/2}
    CReal gamma_T_abs;  // = beta_T_abs
    CReal c_alpha;      // root of 44x^3 - 2x - 1 in (0.3, 0.4)
    CReal c_beta_abs;   // = (44 c_alpha)^{-1/2}
    CReal c_gamma_abs;  // = c_beta_abs
    CReal log_alpha;
    CReal log_alpha_T;
    CReal tau;          // log(alpha) / log(alpha_T)
    CReal tau_inv;      // log(alpha_T) / log(alpha)
    CReal sqrt5_c_alpha;

    static AlgebraicConstants build(Prec prec);

    // Shared cache, one instance per precision. Thread-safe; the returned
    // reference stays valid for the process lifetime.
    static const AlgebraicConstants& at(Prec prec);
};

// Replayable accessors for adaptive-precision consumers.
Refinable tau_refiner();
Refinable tau_inv_refiner();

} // namespace fibtri
