#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <optional>
#include <string>

#include "fibtri/errors.hpp"

namespace fibtri {

using Prec = mpfr_prec_t;

// Precision escalation policy shared by every adaptive computation.
struct PrecisionPolicy {
    Prec initial = 1024;
    Prec max = 65536;
    int factor = 2;
};

// A certified real: a dyadic-endpoint interval [lo, hi] guaranteed to
// contain the exact value. Every operation rounds outward (lo down, hi up)
// so inequalities proven on the endpoints hold for the true values.
// Values are immutable after construction.
class CReal {
public:
    static constexpr Prec kMinPrec = 64;

    CReal();                                  // [0,0]
    explicit CReal(long v, Prec prec = 256);  // exact small integer
    CReal(const CReal&);
    CReal(CReal&&) noexcept;
    CReal& operator=(const CReal&);
    CReal& operator=(CReal&&) noexcept;
    ~CReal();

    // Zero-width enclosure of an exact integer. The working precision is
    // raised to hold z exactly when it does not fit in `prec` bits.
    static CReal from_integer(const mpz_class& z, Prec prec);
    // Tightest enclosure of an exact rational at the given precision.
    static CReal from_rational(const mpq_class& q, Prec prec);
    // Enclosure from two exact rational endpoints (outward).
    static CReal from_endpoints(const mpq_class& lo, const mpq_class& hi, Prec prec);
    // [center.lo - radius.hi, center.hi + radius.hi]; radius must be >= 0.
    static CReal plus_minus(const CReal& center, const CReal& radius);

    Prec precision() const { return prec_; }
    bool is_exact() const;  // lo == hi

    friend CReal operator+(const CReal&, const CReal&);
    friend CReal operator-(const CReal&, const CReal&);
    friend CReal operator*(const CReal&, const CReal&);
    friend CReal operator/(const CReal&, const CReal&);  // DivisorStraddlesZero
    CReal operator-() const;

    CReal log() const;   // DomainError unless lo > 0
    CReal exp() const;
    CReal sqrt() const;  // DomainError unless lo > 0
    CReal nth_root(unsigned long n) const;  // DomainError unless lo > 0
    CReal pow_int(long e) const;            // e < 0 requires 0 excluded
    CReal abs() const;

    // Enclosure of the distance to the nearest integer; requires width < 1/4.
    CReal nearest_integer_distance() const;  // TooWide

    // Exact endpoint access (dyadic rationals).
    mpq_class lo_rational() const;
    mpq_class hi_rational() const;
    mpq_class width_rational() const;  // exact hi - lo

    bool contains(const mpq_class& q) const;
    bool contains(const mpz_class& z) const;
    bool contains(const CReal& other) const;      // other subseteq this
    bool is_positive() const;                     // certified lo > 0
    bool is_negative() const;                     // certified hi < 0
    bool straddles_zero() const;
    bool certainly_less(const CReal& o) const;    // hi < o.lo
    bool certainly_greater(const CReal& o) const; // lo > o.hi
    bool lo_greater(const mpq_class& q) const;    // lo > q (exact)
    bool hi_less(const mpq_class& q) const;       // hi < q (exact)

    // floor shared by both endpoints, when determined
    std::optional<mpz_class> certified_floor() const;

    // Decimal rendering, rounded outward; to_string gives "[lo, hi]".
    std::string decimal_lo(int digits) const;
    std::string decimal_hi(int digits) const;
    std::string to_string(int digits = 30) const;

    mpfr_srcptr lo_ptr() const { return lo_; }
    mpfr_srcptr hi_ptr() const { return hi_; }

private:
    struct Raw {};
    CReal(Raw, Prec prec);  // uninitialised endpoints, internal
    static CReal binary_op(const CReal& a, const CReal& b,
                           int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t));

    mpfr_t lo_;
    mpfr_t hi_;
    Prec prec_;
};

// A computation that can be replayed at any working precision.
using Refinable = std::function<CReal(Prec)>;

// Raised when the precision ladder is exhausted; carries the narrowest
// enclosure that was achieved.
struct PrecisionExhausted : CertificationError {
    PrecisionExhausted(const std::string& what, CReal achieved_)
        : CertificationError(what), achieved(std::move(achieved_)) {}
    explicit PrecisionExhausted(const std::string& what)
        : CertificationError(what), achieved() {}
    CReal achieved;
};

// Re-evaluates `f` at doubling precision until the enclosure width is
// <= target_width, or the policy maximum is reached.
CReal refine(const Refinable& f, const mpq_class& target_width,
             const PrecisionPolicy& policy = {});

} // namespace fibtri
