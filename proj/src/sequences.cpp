#include "fibtri/sequences.hpp"

namespace fibtri {

std::string to_string(SeqKind kind) {
    switch (kind) {
        case SeqKind::fibonacci: return "fibonacci";
        case SeqKind::lucas: return "lucas";
        case SeqKind::tribonacci: return "tribonacci";
    }
    return "?";
}

SeqKind seq_kind_from_string(const std::string& name) {
    if (name == "fibonacci" || name == "fib" || name == "F") return SeqKind::fibonacci;
    if (name == "lucas" || name == "L") return SeqKind::lucas;
    if (name == "tribonacci" || name == "trib" || name == "T") return SeqKind::tribonacci;
    throw ConfigError("unknown sequence kind: " + name);
}

SequenceTable::SequenceTable(SeqKind kind, std::size_t max_index) : kind_(kind) {
    values_.reserve(max_index + 1);
    switch (kind) {
        case SeqKind::fibonacci:
            values_ = {0, 1};
            break;
        case SeqKind::lucas:
            values_ = {2, 1};
            break;
        case SeqKind::tribonacci:
            values_ = {0, 1, 1};
            break;
    }
    while (values_.size() <= max_index) {
        std::size_t s = values_.size();
        if (kind == SeqKind::tribonacci)
            values_.push_back(values_[s - 1] + values_[s - 2] + values_[s - 3]);
        else
            values_.push_back(values_[s - 1] + values_[s - 2]);
    }
    values_.resize(max_index + 1);
}

const mpz_class& SequenceTable::at(std::size_t k) const {
    if (k >= values_.size())
        throw IndexOutOfRange(to_string(kind_) + " index " + std::to_string(k) +
                              " exceeds table maximum " + std::to_string(max_index()));
    return values_[k];
}

const SequenceTable& shared_table(SeqKind kind) {
    static const SequenceTable fib(SeqKind::fibonacci, kDefaultSeqMax);
    static const SequenceTable luc(SeqKind::lucas, kDefaultSeqMax);
    static const SequenceTable trib(SeqKind::tribonacci, kDefaultSeqMax);
    switch (kind) {
        case SeqKind::fibonacci: return fib;
        case SeqKind::lucas: return luc;
        case SeqKind::tribonacci: return trib;
    }
    return fib;
}

mpz_class fibonacci(std::size_t k) { return shared_table(SeqKind::fibonacci).at(k); }
mpz_class lucas(std::size_t k) { return shared_table(SeqKind::lucas).at(k); }
mpz_class tribonacci(std::size_t k) { return shared_table(SeqKind::tribonacci).at(k); }

CReal binet_check(SeqKind kind, std::size_t k, const AlgebraicConstants& c) {
    long e = static_cast<long>(k);
    switch (kind) {
        case SeqKind::fibonacci:
            return (c.alpha.pow_int(e) - c.beta.pow_int(e)) / c.sqrt5;
        case SeqKind::lucas:
            return c.alpha.pow_int(e) + c.beta.pow_int(e);
        case SeqKind::tribonacci: {
            CReal core = c.c_alpha * c.alpha_T.pow_int(e);
            CReal radius = CReal(2L, c.prec) * c.c_beta_abs * c.beta_T_abs.pow_int(e);
            return CReal::plus_minus(core, radius);
        }
    }
    throw ConfigError("binet_check: bad kind");
}

std::vector<std::size_t> growth_bounds_check(SeqKind kind, std::size_t k_max,
                                             const AlgebraicConstants& c) {
    if (kind == SeqKind::lucas)
        throw DomainError("growth bounds are stated for fibonacci and tribonacci only");
    const CReal& base = (kind == SeqKind::fibonacci) ? c.alpha : c.alpha_T;
    const SequenceTable& table = shared_table(kind);

    std::vector<std::size_t> violations;
    for (std::size_t k = 1; k <= k_max; ++k) {
        const mpz_class& v = table.at(k);
        CReal lower = base.pow_int(static_cast<long>(k) - 2);
        CReal upper = base.pow_int(static_cast<long>(k) - 1);
        // certified: upper endpoint of base^(k-2) <= v_k <= lower endpoint of
        // base^(k-1)
        bool ok = mpfr_cmp_z(lower.hi_ptr(), v.get_mpz_t()) <= 0 &&
                  mpfr_cmp_z(upper.lo_ptr(), v.get_mpz_t()) >= 0;
        if (!ok) violations.push_back(k);
    }
    return violations;
}

} // namespace fibtri
