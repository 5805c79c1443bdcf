#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "fibtri/constants.hpp"

namespace fibtri {

enum class SeqKind { fibonacci, lucas, tribonacci };

std::string to_string(SeqKind kind);
SeqKind seq_kind_from_string(const std::string& name);

// Exact values of a linear recurrence sequence, generated iteratively and
// immutable afterwards.
class SequenceTable {
public:
    SequenceTable(SeqKind kind, std::size_t max_index);

    SeqKind kind() const { return kind_; }
    std::size_t max_index() const { return values_.size() - 1; }
    const mpz_class& at(std::size_t k) const;  // IndexOutOfRange

private:
    SeqKind kind_;
    std::vector<mpz_class> values_;
};

inline constexpr std::size_t kDefaultSeqMax = 1000;

// Shared, lazily built tables up to kDefaultSeqMax.
const SequenceTable& shared_table(SeqKind kind);

mpz_class fibonacci(std::size_t k);
mpz_class lucas(std::size_t k);
mpz_class tribonacci(std::size_t k);

// Certified enclosure of the Binet expression for the k-th term. For the
// Tribonacci sequence the complex-pair contribution is absorbed into a
// symmetric radius 2|c_beta||beta_T|^k.
CReal binet_check(SeqKind kind, std::size_t k, const AlgebraicConstants& c);

// Certifies base^(k-2) <= v_k <= base^(k-1) for 1 <= k <= k_max, where base
// is alpha (Fibonacci) or alpha_T (Tribonacci). Returns the indices where
// certification fails (expected empty).
std::vector<std::size_t> growth_bounds_check(SeqKind kind, std::size_t k_max,
                                             const AlgebraicConstants& c);

} // namespace fibtri
