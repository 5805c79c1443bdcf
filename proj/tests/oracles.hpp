#pragma once

// Test-side oracles, coded independently of the library so enclosure checks
// compare against a second route: rational-arithmetic logarithms with
// explicit series remainders, Euclidean continued fractions, a quadratic-loop
// search, and direct enumeration for the reduction lemma.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracles {

struct QInterval {
    mpq_class lo, hi;
};

// q^e for integer e (exact).
inline mpq_class q_pow(const mpq_class& q, long e) {
    mpq_class r(1);
    mpq_class base = e >= 0 ? q : mpq_class(1) / q;
    long n = e >= 0 ? e : -e;
    for (long i = 0; i < n; ++i) r *= base;
    return r;
}

// ln 2 via 2 atanh(1/3) with a rigorous tail bound.
inline QInterval log2_interval(int terms) {
    mpq_class z(1, 3), z2 = z * z, zp = z, s(0);
    for (int i = 0; i < terms; ++i) {
        s += zp / (2 * i + 1);
        zp *= z2;
    }
    mpq_class rem = 2 * zp / ((2 * terms + 1) * (mpq_class(1) - z2));
    return {2 * s, 2 * s + rem};
}

// ln x for exact rational x > 0: scale into [3/4, 3/2], then the atanh
// series 2 sum z^(2i+1)/(2i+1), z = (x-1)/(x+1), with its remainder bound.
inline QInterval log_interval(mpq_class x, int terms) {
    if (x <= 0) throw std::invalid_argument("log_interval: x <= 0");
    long k = 0;
    mpq_class three_half(3, 2), three_quarter(3, 4);
    while (x > three_half) { x /= 2; ++k; }
    while (x < three_quarter) { x *= 2; --k; }

    mpq_class z = (x - 1) / (x + 1), z2 = z * z, zp = z, s(0);
    for (int i = 0; i < terms; ++i) {
        s += zp / (2 * i + 1);
        zp *= z2;
    }
    mpq_class absz_p = zp >= 0 ? zp : mpq_class(-zp);
    mpq_class rem = 2 * absz_p / ((2 * terms + 1) * (mpq_class(1) - z2));
    mpq_class lo = 2 * s - rem, hi = 2 * s + rem;

    QInterval l2 = log2_interval(terms + 8);
    if (k >= 0) return {lo + k * l2.lo, hi + k * l2.hi};
    return {lo + k * l2.hi, hi + k * l2.lo};
}

// Rational bracket of a root by plain bisection (exact signs).
inline QInterval root_bracket(const std::vector<mpz_class>& coeffs, mpq_class a, mpq_class b,
                              int steps) {
    auto eval = [&](const mpq_class& x) {
        mpq_class acc(coeffs.back());
        for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    int sa = sgn(eval(a));
    for (int i = 0; i < steps; ++i) {
        mpq_class mid = (a + b) / 2;
        int sm = sgn(eval(mid));
        if (sm == 0) return {mid, mid};
        if (sm == sa) a = mid; else b = mid;
    }
    return {a, b};
}

// Euclidean continued fraction of an exact rational.
inline std::vector<mpz_class> euclid_cf(mpq_class x) {
    std::vector<mpz_class> out;
    for (;;) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        out.push_back(fl);
        x -= mpq_class(fl);
        if (x == 0) break;
        x = 1 / x;
    }
    return out;
}

// Convergents from a quotient list (exact).
inline std::vector<std::pair<mpz_class, mpz_class>> cf_convergents(
    const std::vector<mpz_class>& quotients) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    mpz_class p2 = 0, p1 = 1, q2 = 1, q1 = 0;
    for (const auto& a : quotients) {
        mpz_class p = a * p1 + p2, q = a * q1 + q2;
        out.emplace_back(p, q);
        p2 = p1; p1 = p;
        q2 = q1; q1 = q;
    }
    return out;
}

// Quadratic-loop search oracle with its own sequence generation; maps c to
// its (n, m) pairs, keeping only c with two or more.
inline std::map<mpz_class, std::vector<std::pair<long, long>>> search_oracle(long n_max,
                                                                             long m_max) {
    std::vector<mpz_class> F = {0, 1}, T = {0, 1, 1};
    for (long i = 2; i < n_max; ++i) F.push_back(F[i - 1] + F[i - 2]);
    for (long i = 3; i < m_max; ++i) T.push_back(T[i - 1] + T[i - 2] + T[i - 3]);

    std::map<mpz_class, std::vector<std::pair<long, long>>> all;
    for (long m = 2; m < m_max; ++m)
        for (long n = 2; n < n_max; ++n) all[F[n] - T[m]].emplace_back(n, m);

    std::map<mpz_class, std::vector<std::pair<long, long>>> out;
    for (auto& [c, v] : all) {
        if (v.size() < 2) continue;
        std::sort(v.begin(), v.end());
        out.emplace(c, v);
    }
    return out;
}

// Direct enumeration for the reduction lemma: true iff no positive integers
// m <= M, n, k >= k0 satisfy 0 < m tau - n + mu < A B^-k. Checking the k0
// window suffices because the windows shrink as k grows.
inline bool dujella_enumeration_holds(const mpq_class& tau, const mpq_class& mu,
                                      const mpq_class& A, const mpq_class& B, long M,
                                      long k0) {
    mpq_class w = A / q_pow(B, k0);
    for (long m = 1; m <= M; ++m) {
        mpq_class v = m * tau + mu;
        mpq_class lo = v - w;
        mpz_class n_lo, n_hi;
        mpz_fdiv_q(n_lo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        n_lo += 1;
        mpz_cdiv_q(n_hi.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        n_hi -= 1;
        if (n_lo < 1) n_lo = 1;
        for (mpz_class n = n_lo; n <= n_hi; ++n) {
            mpq_class d = v - mpq_class(n);
            if (d > 0 && d < w) return false;
        }
    }
    return true;
}

} // namespace oracles
