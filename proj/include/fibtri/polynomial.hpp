#pragma once

#include <gmpxx.h>

#include <vector>

#include "fibtri/creal.hpp"

namespace fibtri {

// Integer-coefficient polynomial, coefficients in ascending degree order.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    mpq_class eval(const mpq_class& x) const;   // exact
    int sign_at(const mpq_class& x) const;      // exact sign
    CReal eval_interval(const CReal& x) const;  // Horner with outward rounding
    IntPolynomial derivative() const;

private:
    std::vector<mpz_class> coeffs_;
};

// Certified enclosure of the unique simple real root of `poly` inside the
// open bracket (lo, hi). The bracket endpoints must have opposite nonzero
// signs, and the derivative must have constant certified sign across the
// bracket (otherwise MultipleRootsSuspected). Result width <= 2^-prec up to
// a small conversion guard.
CReal isolate_real_root(const IntPolynomial& poly, const mpq_class& bracket_lo,
                        const mpq_class& bracket_hi, Prec prec);

} // namespace fibtri
