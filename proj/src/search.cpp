#include "fibtri/search.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "fibtri/parallel.hpp"
#include "fibtri/sequences.hpp"

namespace fibtri {

namespace {

mpz_class ceil_of_hi(const CReal& x) {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(x.hi_ptr()));
    mpfr_ceil(t, x.hi_ptr());
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

mpz_class floor_of_lo(const CReal& x) {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(x.lo_ptr()));
    mpfr_floor(t, x.lo_ptr());
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

std::string rep_key(const mpz_class& c, const Representation& r) {
    std::ostringstream os;
    os << "c=" << c.get_str() << " (n=" << r.n << ", m=" << r.m
       << ", F=" << r.f_value.get_str() << ", T=" << r.t_value.get_str() << ")";
    return os.str();
}

} // namespace

std::vector<SolutionRecord> search(std::size_t n_max, std::size_t m_max, int workers) {
    if (n_max < 3 || m_max < 3)
        throw ConfigError("search: ranges must allow at least n=2 and m=2");

    const SequenceTable& fib = shared_table(SeqKind::fibonacci);
    const SequenceTable& trib = shared_table(SeqKind::tribonacci);
    fib.at(n_max - 1);   // fail fast when the range exceeds the table
    trib.at(m_max - 1);

    using Entry = std::tuple<mpz_class, std::size_t, std::size_t>;
    std::vector<Entry> entries;
    entries.reserve((n_max - 2) * (m_max - 2));
    std::mutex mu;

    parallel_for(2, n_max, workers, [&](std::size_t n) {
        const mpz_class& f = fib.at(n);
        std::vector<Entry> local;
        local.reserve(m_max - 2);
        for (std::size_t m = 2; m < m_max; ++m)
            local.emplace_back(f - trib.at(m), n, m);
        std::lock_guard<std::mutex> lock(mu);
        for (auto& e : local) entries.push_back(std::move(e));
    });

    std::sort(entries.begin(), entries.end());

    std::vector<SolutionRecord> records;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j < entries.size() && std::get<0>(entries[j]) == std::get<0>(entries[i])) ++j;
        if (j - i >= 2) {
            SolutionRecord rec;
            rec.c = std::get<0>(entries[i]);
            for (std::size_t t = i; t < j; ++t) {
                std::size_t n = std::get<1>(entries[t]);
                std::size_t m = std::get<2>(entries[t]);
                rec.reps.push_back({n, m, fib.at(n), trib.at(m)});
            }
            records.push_back(std::move(rec));
        }
        i = j;
    }

    // |c| ascending, positive before negative on ties (the order the
    // solution set is conventionally displayed in)
    std::sort(records.begin(), records.end(),
              [](const SolutionRecord& a, const SolutionRecord& b) {
                  mpz_class aa = abs(a.c), ab = abs(b.c);
                  if (aa != ab) return aa < ab;
                  return a.c > b.c;
              });
    return records;
}

TableVerdict verify_golden_table(const std::vector<SolutionRecord>& records,
                                 const std::vector<SolutionRecord>& golden) {
    auto flatten = [](const std::vector<SolutionRecord>& recs) {
        std::vector<std::string> keys;
        for (const auto& rec : recs)
            for (const auto& rep : rec.reps) keys.push_back(rep_key(rec.c, rep));
        std::sort(keys.begin(), keys.end());
        return keys;
    };
    std::vector<std::string> found = flatten(records), want = flatten(golden);

    TableVerdict v;
    std::set_difference(want.begin(), want.end(), found.begin(), found.end(),
                        std::back_inserter(v.missing));
    std::set_difference(found.begin(), found.end(), want.begin(), want.end(),
                        std::back_inserter(v.extra));
    v.pass = v.missing.empty() && v.extra.empty();
    return v;
}

std::vector<SolutionRecord> load_solution_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open solution table: " + path);
    nlohmann::json j = nlohmann::json::parse(in);

    auto to_mpz = [](const nlohmann::json& v) {
        if (v.is_string()) return mpz_class(v.get<std::string>());
        return mpz_class(std::to_string(v.get<long long>()));
    };

    std::vector<SolutionRecord> out;
    for (const auto& sol : j.at("solutions")) {
        SolutionRecord rec;
        rec.c = to_mpz(sol.at("c"));
        for (const auto& rep : sol.at("reps")) {
            Representation r;
            r.n = rep.at("n").get<std::size_t>();
            r.m = rep.at("m").get<std::size_t>();
            r.f_value = to_mpz(rep.at("F"));
            r.t_value = to_mpz(rep.at("T"));
            if (r.f_value - r.t_value != rec.c)
                throw ConfigError("solution table entry inconsistent at " + rep_key(rec.c, r));
            rec.reps.push_back(std::move(r));
        }
        if (rec.reps.size() < 2)
            throw ConfigError("solution table record with fewer than two representations");
        out.push_back(std::move(rec));
    }
    return out;
}

RangeJustification range_justification(const AlgebraicConstants& c, long n) {
    RangeJustification rj;
    rj.n = n;
    rj.vacuous = n <= 4;

    // solutions satisfy m < 5 + (n-3)/tau_inv and m > 1 + (n-4)/tau_inv
    CReal upper = CReal(5L, c.prec) + CReal(n - 3, c.prec) / c.tau_inv;
    CReal lower = CReal(1L, c.prec) + CReal(n - 4, c.prec) / c.tau_inv;
    rj.m_upper = static_cast<long>(mpz_class(ceil_of_hi(upper) - 1).get_si());
    rj.m_lower = static_cast<long>(mpz_class(floor_of_lo(lower) + 1).get_si());
    rj.implies_m_below_240 = rj.m_upper < 240;

    std::ostringstream os;
    os << "n=" << n << ": certified " << rj.m_lower << " <= m <= " << rj.m_upper;
    if (rj.vacuous) os << " (degenerate: below the derivation's index preconditions)";
    rj.detail = os.str();
    return rj;
}

} // namespace fibtri
