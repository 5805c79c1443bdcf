#include "fibtri/constants.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "fibtri/polynomial.hpp"

namespace fibtri {

AlgebraicConstants AlgebraicConstants::build(Prec prec) {
    AlgebraicConstants c;
    c.prec = prec;

    IntPolynomial fib_char({-1, -1, 1});        // x^2 - x - 1
    IntPolynomial trib_char({-1, -1, -1, 1});   // x^3 - x^2 - x - 1
    IntPolynomial coeff_char({-1, -2, 0, 44});  // 44x^3 - 2x - 1

    c.sqrt5 = CReal(5L, prec).sqrt();
    c.alpha = isolate_real_root(fib_char, mpq_class(1), mpq_class(2), prec);
    c.beta = isolate_real_root(fib_char, mpq_class(-1), mpq_class(0), prec);
    c.alpha_T = isolate_real_root(trib_char, mpq_class(18, 10), mpq_class(19, 10), prec);
    c.c_alpha = isolate_real_root(coeff_char, mpq_class(3, 10), mpq_class(4, 10), prec);

    // alpha_T * |beta_T|^2 = 1 (product of the roots of x^3 - x^2 - x - 1)
    c.beta_T_abs = (CReal(1L, prec) / c.alpha_T).sqrt();
    c.gamma_T_abs = c.beta_T_abs;
    // 44 c_alpha |c_beta|^2 = 1 (product of the roots of 44x^3 - 2x - 1)
    c.c_beta_abs = (CReal(1L, prec) / (CReal(44L, prec) * c.c_alpha)).sqrt();
    c.c_gamma_abs = c.c_beta_abs;

    c.log_alpha = c.alpha.log();
    c.log_alpha_T = c.alpha_T.log();
    c.tau = c.log_alpha / c.log_alpha_T;
    c.tau_inv = c.log_alpha_T / c.log_alpha;
    c.sqrt5_c_alpha = c.sqrt5 * c.c_alpha;
    return c;
}

const AlgebraicConstants& AlgebraicConstants::at(Prec prec) {
    static std::mutex mu;
    static std::map<Prec, std::unique_ptr<const AlgebraicConstants>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it == cache.end()) {
        it = cache.emplace(prec, std::make_unique<const AlgebraicConstants>(build(prec))).first;
    }
    return *it->second;
}

Refinable tau_refiner() {
    return [](Prec p) { return AlgebraicConstants::at(p).tau; };
}

Refinable tau_inv_refiner() {
    return [](Prec p) { return AlgebraicConstants::at(p).tau_inv; };
}

} // namespace fibtri
