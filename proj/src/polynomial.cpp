#include "fibtri/polynomial.hpp"

namespace fibtri {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    if (coeffs_.empty()) return 0;
    mpq_class acc(coeffs_.back());
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        acc = acc * x + mpq_class(*it);
    }
    return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
    return sgn(eval(x));
}

CReal IntPolynomial::eval_interval(const CReal& x) const {
    if (coeffs_.empty()) return CReal(0L, x.precision());
    CReal acc = CReal::from_integer(mpz_class(coeffs_.back()), x.precision());
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        acc = acc * x + CReal::from_integer(mpz_class(*it), x.precision());
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * static_cast<long>(i));
    if (d.empty()) d.push_back(0);
    return IntPolynomial(std::move(d));
}

CReal isolate_real_root(const IntPolynomial& poly, const mpq_class& bracket_lo,
                        const mpq_class& bracket_hi, Prec prec) {
    if (bracket_lo >= bracket_hi)
        throw NoSignChange("empty bracket");

    int slo = poly.sign_at(bracket_lo);
    int shi = poly.sign_at(bracket_hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw NoSignChange("polynomial does not change sign across the bracket");

    // A derivative enclosure straddling zero over the whole bracket means we
    // cannot rule out a multiple root (or several roots).
    CReal bracket = CReal::from_endpoints(bracket_lo, bracket_hi, std::max<Prec>(prec, 256));
    CReal dval = poly.derivative().eval_interval(bracket);
    if (dval.straddles_zero())
        throw MultipleRootsSuspected("derivative sign not constant across bracket");

    mpq_class a = bracket_lo, b = bracket_hi;
    mpq_class target(mpz_class(1), mpz_class(1) << static_cast<unsigned>(prec));
    while (b - a > target) {
        mpq_class mid = (a + b) / 2;
        int sm = poly.sign_at(mid);
        if (sm == 0) {
            // exact rational root
            return CReal::from_endpoints(mid, mid, prec + 32);
        }
        if (sm == slo) a = mid; else b = mid;
    }
    return CReal::from_endpoints(a, b, prec + 32);
}

} // namespace fibtri
