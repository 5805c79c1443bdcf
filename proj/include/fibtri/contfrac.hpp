#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "fibtri/creal.hpp"

namespace fibtri {

// One convergent p_k/q_k of a continued fraction.
struct Convergent {
    std::size_t k = 0;
    mpz_class a;  // partial quotient a_k
    mpz_class p;
    mpz_class q;
};

// First `count` certified partial quotients of x. A quotient is accepted
// only when both endpoints of the current tail have the same floor; the
// working precision doubles until that holds. An exact rational input is
// expanded by the Euclidean algorithm and raises PrecisionExhausted when its
// expansion terminates before `count` terms.
std::vector<mpz_class> cf_expand(const Refinable& x, std::size_t count,
                                 const PrecisionPolicy& policy = {});

// Exact convergents for k = 0..upto from a quotient list.
std::vector<Convergent> convergents(const std::vector<mpz_class>& quotients,
                                    std::size_t upto);

// The convergent of smallest index with q_k > bound.
Convergent first_denominator_exceeding(const Refinable& x, const mpz_class& bound,
                                       const PrecisionPolicy& policy = {});

// The (k+1)-th convergent.
Convergent next_convergent_after(const Refinable& x, std::size_t k,
                                 const PrecisionPolicy& policy = {});

// Convenience: a single convergent by index.
Convergent convergent_at(const Refinable& x, std::size_t k,
                         const PrecisionPolicy& policy = {});

} // namespace fibtri
