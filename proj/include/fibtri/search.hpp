#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "fibtri/constants.hpp"

namespace fibtri {

// One way of writing c as F_n - T_m.
struct Representation {
    std::size_t n = 0;
    std::size_t m = 0;
    mpz_class f_value;
    mpz_class t_value;

    bool operator==(const Representation& o) const {
        return n == o.n && m == o.m && f_value == o.f_value && t_value == o.t_value;
    }
};

// An integer c together with all of its representations in range, sorted by
// (n, m). Only kept when there are at least two.
struct SolutionRecord {
    mpz_class c;
    std::vector<Representation> reps;
};

// Exhaustive search over 2 <= n < n_max, 2 <= m < m_max for integers with at
// least two representations F_n - T_m. Records are sorted by |c|, ties
// positive first (the order the solution set is conventionally listed in);
// representations by (n, m).
std::vector<SolutionRecord> search(std::size_t n_max, std::size_t m_max, int workers = 1);

struct TableVerdict {
    bool pass = false;
    std::vector<std::string> missing;  // present in golden, absent in records
    std::vector<std::string> extra;    // present in records, absent in golden
};

// Compares a search result against the golden solution table.
TableVerdict verify_golden_table(const std::vector<SolutionRecord>& records,
                                 const std::vector<SolutionRecord>& golden);

// Loads a golden table from its JSON data file.
std::vector<SolutionRecord> load_solution_records(const std::string& path);

// Certified index-range bookkeeping: bounds on m implied by a given n via the
// two-sided inequality linking n and m for solutions.
struct RangeJustification {
    long n = 0;
    bool vacuous = false;   // n too small for the derivation's preconditions
    long m_upper = 0;       // any solution with this n has m <= m_upper
    long m_lower = 0;       // ... and m >= m_lower
    bool implies_m_below_240 = false;
    std::string detail;
};

RangeJustification range_justification(const AlgebraicConstants& c, long n);

} // namespace fibtri
