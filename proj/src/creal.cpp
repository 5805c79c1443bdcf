#include "fibtri/creal.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <utility>

namespace fibtri {

namespace {

Prec clamp_prec(Prec p) {
    return std::max<Prec>(p, CReal::kMinPrec);
}

} // namespace

CReal::CReal(Raw, Prec prec) : prec_(clamp_prec(prec)) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
}

CReal::CReal() : CReal(Raw{}, kMinPrec) {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

CReal::CReal(long v, Prec prec) : CReal(Raw{}, prec) {
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

CReal::CReal(const CReal& o) : CReal(Raw{}, o.prec_) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

CReal::CReal(CReal&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, kMinPrec);
    mpfr_init2(hi_, kMinPrec);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

CReal& CReal::operator=(const CReal& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

CReal& CReal::operator=(CReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

CReal::~CReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

CReal CReal::from_integer(const mpz_class& z, Prec prec) {
    Prec need = static_cast<Prec>(mpz_sizeinbase(z.get_mpz_t(), 2));
    CReal r(Raw{}, std::max(clamp_prec(prec), need));
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
}

CReal CReal::from_rational(const mpq_class& q, Prec prec) {
    CReal r(Raw{}, prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

CReal CReal::from_endpoints(const mpq_class& lo, const mpq_class& hi, Prec prec) {
    if (lo > hi) throw CertificationError("from_endpoints: lo > hi");
    CReal r(Raw{}, prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

CReal CReal::plus_minus(const CReal& center, const CReal& radius) {
    if (mpfr_sgn(radius.lo_) < 0)
        throw CertificationError("plus_minus: negative radius");
    CReal r(Raw{}, std::max(center.prec_, radius.prec_));
    mpfr_sub(r.lo_, center.lo_, radius.hi_, MPFR_RNDD);
    mpfr_add(r.hi_, center.hi_, radius.hi_, MPFR_RNDU);
    return r;
}

bool CReal::is_exact() const { return mpfr_cmp(lo_, hi_) == 0; }

CReal CReal::binary_op(const CReal& a, const CReal& b,
                       int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    CReal r(CReal::Raw{}, std::max(a.prec_, b.prec_));
    op(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    op(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

CReal operator+(const CReal& a, const CReal& b) {
    return CReal::binary_op(a, b, mpfr_add);
}

CReal operator-(const CReal& a, const CReal& b) {
    CReal r(CReal::Raw{}, std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

CReal CReal::operator-() const {
    CReal r(Raw{}, prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

CReal operator*(const CReal& a, const CReal& b) {
    // [a]*[b] = [min of the four products, max of the four products]
    CReal r(CReal::Raw{}, std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);

    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);

    mpfr_clear(t);
    return r;
}

CReal operator/(const CReal& a, const CReal& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
        throw DivisorStraddlesZero();
    CReal r(CReal::Raw{}, std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);

    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);

    mpfr_clear(t);
    return r;
}

CReal CReal::log() const {
    if (mpfr_sgn(lo_) <= 0)
        throw DomainError("log of non-positive enclosure");
    CReal r(Raw{}, prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

CReal CReal::exp() const {
    CReal r(Raw{}, prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

CReal CReal::sqrt() const {
    if (mpfr_sgn(lo_) <= 0)
        throw DomainError("sqrt of non-positive enclosure");
    CReal r(Raw{}, prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

CReal CReal::nth_root(unsigned long n) const {
    if (n == 0) throw DomainError("0th root");
    if (mpfr_sgn(lo_) <= 0)
        throw DomainError("nth_root of non-positive enclosure");
    CReal r(Raw{}, prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

CReal CReal::pow_int(long e) const {
    if (e < 0) {
        CReal one(1L, prec_);
        return one / pow_int(-e);
    }
    CReal r(Raw{}, prec_);
    if (e == 0) {
        mpfr_set_si(r.lo_, 1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    unsigned long ue = static_cast<unsigned long>(e);
    bool odd = (e % 2 != 0);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_pow_ui(r.lo_, lo_, ue, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, hi_, ue, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        if (odd) {
            mpfr_pow_ui(r.lo_, lo_, ue, MPFR_RNDD);
            mpfr_pow_ui(r.hi_, hi_, ue, MPFR_RNDU);
        } else {
            mpfr_pow_ui(r.lo_, hi_, ue, MPFR_RNDD);
            mpfr_pow_ui(r.hi_, lo_, ue, MPFR_RNDU);
        }
    } else {
        // enclosure straddles zero
        if (odd) {
            mpfr_pow_ui(r.lo_, lo_, ue, MPFR_RNDD);
            mpfr_pow_ui(r.hi_, hi_, ue, MPFR_RNDU);
        } else {
            mpfr_t t;
            mpfr_init2(t, prec_);
            mpfr_set_zero(r.lo_, 1);
            mpfr_pow_ui(r.hi_, hi_, ue, MPFR_RNDU);
            mpfr_pow_ui(t, lo_, ue, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
            mpfr_clear(t);
        }
    }
    return r;
}

CReal CReal::abs() const {
    CReal r(Raw{}, prec_);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_set(r.lo_, lo_, MPFR_RNDD);
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(t, lo_, MPFR_RNDU);
        mpfr_max(r.hi_, hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }
    return r;
}

mpq_class CReal::lo_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

mpq_class CReal::hi_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

mpq_class CReal::width_rational() const {
    return hi_rational() - lo_rational();
}

CReal CReal::nearest_integer_distance() const {
    static const mpq_class kQuarter(1, 4);
    static const mpq_class kHalf(1, 2);
    if (width_rational() >= kQuarter)
        throw TooWide("nearest_integer_distance: enclosure width >= 1/4");

    mpq_class l = lo_rational(), h = hi_rational();

    // exact ||q|| for a rational endpoint
    auto dist = [](const mpq_class& q) {
        mpz_class n;
        mpq_class shifted = q + mpq_class(1, 2);
        mpz_fdiv_q(n.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        mpq_class d = q - mpq_class(n);
        return d < 0 ? mpq_class(-d) : d;
    };

    mpz_class ceil_l, floor_h;
    mpz_cdiv_q(ceil_l.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
    mpz_fdiv_q(floor_h.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    bool has_integer = ceil_l <= floor_h;

    // odd integer inside [2l, 2h] <=> half-integer inside [l, h]
    mpq_class l2 = 2 * l, h2 = 2 * h;
    mpz_class ceil_l2, floor_h2;
    mpz_cdiv_q(ceil_l2.get_mpz_t(), l2.get_num_mpz_t(), l2.get_den_mpz_t());
    mpz_fdiv_q(floor_h2.get_mpz_t(), h2.get_num_mpz_t(), h2.get_den_mpz_t());
    bool has_half = false;
    if (ceil_l2 <= floor_h2) {
        if (mpz_odd_p(ceil_l2.get_mpz_t())) has_half = true;
        else if (ceil_l2 + 1 <= floor_h2) has_half = true;
    }

    mpq_class dl = dist(l), dh = dist(h);
    mpq_class lower = has_integer ? mpq_class(0) : std::min(dl, dh);
    mpq_class upper = has_half ? kHalf : std::max(dl, dh);
    return from_endpoints(lower, upper, prec_);
}

bool CReal::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool CReal::contains(const mpz_class& z) const {
    return mpfr_cmp_z(lo_, z.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, z.get_mpz_t()) >= 0;
}

bool CReal::contains(const CReal& other) const {
    return mpfr_cmp(lo_, other.lo_) <= 0 && mpfr_cmp(hi_, other.hi_) >= 0;
}

bool CReal::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool CReal::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool CReal::straddles_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool CReal::certainly_less(const CReal& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool CReal::certainly_greater(const CReal& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }

bool CReal::lo_greater(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool CReal::hi_less(const mpq_class& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

std::optional<mpz_class> CReal::certified_floor() const {
    mpz_class fl, fh;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(lo_));
    mpfr_floor(t, lo_);
    mpfr_get_z(fl.get_mpz_t(), t, MPFR_RNDN);
    mpfr_set_prec(t, mpfr_get_prec(hi_));
    mpfr_floor(t, hi_);
    mpfr_get_z(fh.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    if (fl == fh) return fl;
    return std::nullopt;
}

namespace {

std::string format_endpoint(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*e", digits, rnd, x) < 0)
        throw CertificationError("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

} // namespace

std::string CReal::decimal_lo(int digits) const {
    return format_endpoint(lo_, digits, MPFR_RNDD);
}

std::string CReal::decimal_hi(int digits) const {
    return format_endpoint(hi_, digits, MPFR_RNDU);
}

std::string CReal::to_string(int digits) const {
    return "[" + decimal_lo(digits) + ", " + decimal_hi(digits) + "]";
}

CReal refine(const Refinable& f, const mpq_class& target_width,
             const PrecisionPolicy& policy) {
    if (target_width < 0)
        throw CertificationError("refine: negative target width");
    std::optional<CReal> best;
    for (Prec p = policy.initial;; p *= policy.factor) {
        if (p > policy.max) p = policy.max;
        CReal v = f(p);
        if (!best || v.width_rational() < best->width_rational()) best = v;
        if (best->width_rational() <= target_width) return *best;
        if (p >= policy.max) break;
    }
    throw PrecisionExhausted("refine: precision ladder exhausted", *best);
}

} // namespace fibtri
