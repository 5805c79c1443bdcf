#include "fibtri/contfrac.hpp"

namespace fibtri {

namespace {

mpz_class rational_floor(const mpq_class& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return z;
}

// Euclidean expansion of an exact rational tail; appends to out until
// `count` quotients exist or the expansion terminates (returns false).
bool expand_exact(mpq_class x, std::size_t count, std::vector<mpz_class>& out) {
    while (out.size() < count) {
        mpz_class fl = rational_floor(x);
        out.push_back(fl);
        mpq_class frac = x - mpq_class(fl);
        if (frac == 0) return out.size() == count;
        x = 1 / frac;
    }
    return true;
}

} // namespace

std::vector<mpz_class> cf_expand(const Refinable& x, std::size_t count,
                                 const PrecisionPolicy& policy) {
    if (count < 1) throw ConfigError("cf_expand: count must be >= 1");

    for (Prec p = policy.initial;; p *= policy.factor) {
        if (p > policy.max) p = policy.max;
        CReal enc = x(p);
        mpq_class lo = enc.lo_rational(), hi = enc.hi_rational();

        std::vector<mpz_class> out;
        bool ok = true;
        while (out.size() < count) {
            if (lo == hi) {
                if (!expand_exact(lo, count, out))
                    throw PrecisionExhausted(
                        "cf_expand: rational expansion terminated after " +
                            std::to_string(out.size()) + " quotients",
                        enc);
                break;
            }
            mpz_class fl = rational_floor(lo), fh = rational_floor(hi);
            if (fl != fh) { ok = false; break; }  // floor undecided: escalate
            out.push_back(fl);
            mpq_class rl = lo - mpq_class(fl), rh = hi - mpq_class(fl);
            if (rl == 0) { ok = false; break; }   // tail may vanish: escalate
            lo = 1 / rh;
            hi = 1 / rl;
        }
        if (ok && out.size() == count) return out;
        if (p >= policy.max)
            throw PrecisionExhausted("cf_expand: partial quotient undecidable at max precision",
                                     x(policy.max));
    }
}

std::vector<Convergent> convergents(const std::vector<mpz_class>& quotients,
                                    std::size_t upto) {
    if (upto >= quotients.size())
        throw IndexOutOfRange("convergents: index exceeds quotient list");
    std::vector<Convergent> out;
    mpz_class p_prev2 = 0, p_prev = 1;  // p_{-2}, p_{-1}
    mpz_class q_prev2 = 1, q_prev = 0;  // q_{-2}, q_{-1}
    for (std::size_t k = 0; k <= upto; ++k) {
        Convergent c;
        c.k = k;
        c.a = quotients[k];
        c.p = c.a * p_prev + p_prev2;
        c.q = c.a * q_prev + q_prev2;
        p_prev2 = p_prev; p_prev = c.p;
        q_prev2 = q_prev; q_prev = c.q;
        out.push_back(std::move(c));
    }
    return out;
}

Convergent first_denominator_exceeding(const Refinable& x, const mpz_class& bound,
                                       const PrecisionPolicy& policy) {
    if (bound < 1) throw ConfigError("first_denominator_exceeding: bound must be >= 1");
    std::size_t terms = 16;
    for (;;) {
        std::vector<mpz_class> q = cf_expand(x, terms, policy);
        std::vector<Convergent> conv = convergents(q, terms - 1);
        for (auto& c : conv)
            if (c.q > bound) return c;
        terms *= 2;
        if (terms > 1u << 20)
            throw PrecisionExhausted("first_denominator_exceeding: no convergent found");
    }
}

Convergent next_convergent_after(const Refinable& x, std::size_t k,
                                 const PrecisionPolicy& policy) {
    return convergent_at(x, k + 1, policy);
}

Convergent convergent_at(const Refinable& x, std::size_t k,
                         const PrecisionPolicy& policy) {
    std::vector<mpz_class> q = cf_expand(x, k + 1, policy);
    return convergents(q, k).back();
}

} // namespace fibtri
