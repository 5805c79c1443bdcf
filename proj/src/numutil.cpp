#include "fibtri/numutil.hpp"

#include <mpfr.h>

#include "fibtri/errors.hpp"

namespace fibtri {

mpq_class mpq_from_decimal(const std::string& s) {
    if (s.empty()) throw ConfigError("empty decimal string");
    std::string t = s;
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(t.substr(epos + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad decimal: " + s);
        }
        t = t.substr(0, epos);
    }
    bool neg = false;
    std::size_t pos = 0;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = (t[0] == '-');
        pos = 1;
    }
    std::string digits;
    long frac_digits = -1;
    for (; pos < t.size(); ++pos) {
        char c = t[pos];
        if (c == '.') {
            if (frac_digits >= 0) throw ConfigError("bad decimal: " + s);
            frac_digits = 0;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (frac_digits >= 0) ++frac_digits;
        } else {
            throw ConfigError("bad decimal: " + s);
        }
    }
    if (digits.empty()) throw ConfigError("bad decimal: " + s);
    mpz_class num(digits, 10);
    mpz_class den(1);
    long down = std::max(frac_digits, 0L) - exp10;
    for (long i = 0; i < down; ++i) den *= 10;
    for (long i = 0; i < -down; ++i) num *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

mpz_class mpz_from_scientific(const std::string& s) {
    mpq_class q = mpq_from_decimal(s);
    if (q.get_den() != 1) throw ConfigError("not an integer: " + s);
    return q.get_num();
}

namespace {

std::string decimal_directed(const mpq_class& q, int digits, mpfr_rnd_t rnd) {
    // enough bits for the requested decimal digits, plus the exact input
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 4 + 64);
    mpfr_t x;
    mpfr_init2(x, prec);
    mpfr_set_q(x, q.get_mpq_t(), rnd);
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*e", digits, rnd, x) < 0) {
        mpfr_clear(x);
        throw CertificationError("mpfr_asprintf failed");
    }
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(x);
    return out;
}

} // namespace

std::string decimal_lower(const mpq_class& q, int digits) {
    return decimal_directed(q, digits, MPFR_RNDD);
}

std::string decimal_upper(const mpq_class& q, int digits) {
    return decimal_directed(q, digits, MPFR_RNDU);
}

} // namespace fibtri
