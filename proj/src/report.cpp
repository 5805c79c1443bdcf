#include "fibtri/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "fibtri/numutil.hpp"
#include "fibtri/polynomial.hpp"
#include "fibtri/sequences.hpp"

namespace fibtri {

std::string version_string() { return "1.0.0"; }

namespace {

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool intersects(const CReal& a, const CReal& b) {
    return !(a.certainly_less(b) || b.certainly_less(a));
}

bool inside(const CReal& x, const char* lo, const char* hi) {
    return x.lo_greater(mpq_from_decimal(lo)) && x.hi_less(mpq_from_decimal(hi));
}

ConstantsSection check_constants(const AlgebraicConstants& c) {
    ConstantsSection s;
    s.brackets_ok = inside(c.alpha_T, "1.839", "1.840") &&
                    inside(c.c_alpha, "0.336", "0.337") &&
                    inside(c.beta_T_abs, "0.737", "0.738") &&
                    inside(c.c_beta_abs, "0.259", "0.260");

    IntPolynomial fib_char({-1, -1, 1});
    IntPolynomial trib_char({-1, -1, -1, 1});
    IntPolynomial coeff_char({-1, -2, 0, 44});
    mpq_class zero(0);
    s.residuals_ok = fib_char.eval_interval(c.alpha).contains(zero) &&
                     trib_char.eval_interval(c.alpha_T).contains(zero) &&
                     coeff_char.eval_interval(c.c_alpha).contains(zero);

    s.tau_product_ok = (c.tau * c.tau_inv).contains(mpq_class(1));

    // nested-radical formulas, checked coarsely at 64 bits only
    {
        Prec p = 64;
        CReal r33 = CReal(33L, p).sqrt();
        CReal u = (CReal(19L, p) + CReal(3L, p) * r33).nth_root(3);
        CReal v = (CReal(19L, p) - CReal(3L, p) * r33).nth_root(3);
        CReal alpha_T_rad = (CReal(1L, p) + u + v) / CReal(3L, p);
        CReal denom = -(alpha_T_rad.pow_int(2)) + CReal(4L, p) * alpha_T_rad - CReal(1L, p);
        CReal c_alpha_rad = CReal(1L, p) / denom;
        s.radical_crosscheck_ok = intersects(alpha_T_rad, c.alpha_T) &&
                                  intersects(c_alpha_rad, c.c_alpha);
    }

    s.ok = s.brackets_ok && s.residuals_ok && s.tau_product_ok && s.radical_crosscheck_ok;
    return s;
}

SequencesSection check_sequences(const AlgebraicConstants& c, std::size_t n_max,
                                 std::size_t m_max) {
    SequencesSection s;
    const auto& F = shared_table(SeqKind::fibonacci);
    const auto& L = shared_table(SeqKind::lucas);
    const auto& T = shared_table(SeqKind::tribonacci);

    s.recurrences_ok = true;
    for (std::size_t k = 0; k + 2 <= n_max; ++k) {
        if (F.at(k + 2) != F.at(k + 1) + F.at(k)) s.recurrences_ok = false;
        if (L.at(k + 2) != L.at(k + 1) + L.at(k)) s.recurrences_ok = false;
    }
    for (std::size_t k = 0; k + 3 <= m_max; ++k)
        if (T.at(k + 3) != T.at(k + 2) + T.at(k + 1) + T.at(k)) s.recurrences_ok = false;

    s.cross_identity_ok = true;
    for (std::size_t k = 0; k <= n_max; ++k) {
        mpz_class want = (k % 2 == 0) ? 4 : -4;
        if (L.at(k) * L.at(k) - 5 * F.at(k) * F.at(k) != want) s.cross_identity_ok = false;
    }

    s.difference_identity_ok = true;
    for (std::size_t m = 3; m <= m_max; ++m)
        if (T.at(m) - T.at(m - 1) != T.at(m - 2) + T.at(m - 3))
            s.difference_identity_ok = false;

    s.growth_fibonacci_ok = growth_bounds_check(SeqKind::fibonacci, n_max, c).empty();
    s.growth_tribonacci_ok = growth_bounds_check(SeqKind::tribonacci, m_max, c).empty();

    s.binet_ok = true;
    for (std::size_t k = 0; k <= 60; ++k) {
        if (!binet_check(SeqKind::fibonacci, k, c).contains(F.at(k))) s.binet_ok = false;
        if (!binet_check(SeqKind::lucas, k, c).contains(L.at(k))) s.binet_ok = false;
        if (!binet_check(SeqKind::tribonacci, k, c).contains(T.at(k))) s.binet_ok = false;
    }
    for (std::size_t k : {100u, 200u, 299u})
        if (!binet_check(SeqKind::fibonacci, k, c).contains(F.at(k))) s.binet_ok = false;
    for (std::size_t k : {100u, 150u, 239u})
        if (!binet_check(SeqKind::tribonacci, k, c).contains(T.at(k))) s.binet_ok = false;

    s.ok = s.recurrences_ok && s.cross_identity_ok && s.difference_identity_ok &&
           s.growth_fibonacci_ok && s.growth_tribonacci_ok && s.binet_ok;
    return s;
}

} // namespace

VerifyReport verify(const RunConfig& cfg) {
    VerifyReport rep;
    rep.version = version_string();
    rep.timestamp = utc_timestamp();
    rep.config = cfg;

    auto fail = [&rep](const std::string& step, int code) {
        rep.failed_step = step;
        rep.exit_code = code;
        rep.overall = "FAILED(" + step + ")";
    };

    const AlgebraicConstants& C = AlgebraicConstants::at(cfg.precision.initial);

    rep.constants = check_constants(C);
    if (!rep.constants.ok) {
        fail("constants", 2);
        return rep;
    }

    rep.sequences = check_sequences(C, cfg.n_max, cfg.m_max);
    if (!rep.sequences.ok) {
        fail("sequences", 2);
        return rep;
    }

    rep.search_result.records = search(cfg.n_max, cfg.m_max, cfg.effective_workers());
    rep.search_result.record_count = static_cast<long>(rep.search_result.records.size());
    for (const auto& r : rep.search_result.records)
        rep.search_result.representation_count += static_cast<long>(r.reps.size());
    std::vector<SolutionRecord> golden;
    try {
        golden = load_solution_records(cfg.golden_table_path);
    } catch (const ConfigError& e) {
        fail("config", 5);
        rep.search_result.verdict.missing.push_back(e.what());
        return rep;
    }
    rep.search_result.verdict = verify_golden_table(rep.search_result.records, golden);
    rep.search_result.ok = rep.search_result.verdict.pass;
    if (!rep.search_result.ok) {
        fail("search", 1);
        return rep;
    }

    try {
        rep.bounds = run_bounds_chain(C, PublishedBoundConstants::defaults(), cfg.precision);
    } catch (const PrecisionExhausted&) {
        fail("bounds", 4);
        return rep;
    }
    if (!rep.bounds.ok) {
        bool precision = rep.bounds.error.find("precision") != std::string::npos ||
                         rep.bounds.error.find("undecided at max") != std::string::npos;
        fail("bounds", precision ? 4 : 2);
        return rep;
    }

    rep.campaign = run_campaign(cfg.campaign_config(), rep.bounds.global_result.bound);
    if (!rep.campaign.proof_complete) {
        bool precision = false;
        for (const auto& f : rep.campaign.failures)
            if (f.find("precision") != std::string::npos) precision = true;
        for (const auto* st : {&rep.campaign.stage1, &rep.campaign.stage2, &rep.campaign.stage3})
            if (st->pos.note.find("precision exhausted") != std::string::npos ||
                st->neg.note.find("precision exhausted") != std::string::npos)
                precision = true;
        fail("campaign", precision ? 4 : 3);
        return rep;
    }

    if (rep.campaign.final_n_bound < static_cast<long>(cfg.n_max)) {
        rep.overall = "PROOF-REPLAYED";
        rep.exit_code = 0;
    } else {
        fail("campaign", 3);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// serialization

ordered_json creal_json(const CReal& x, int digits) {
    return ordered_json{{"lo", x.decimal_lo(digits)},
                        {"hi", x.decimal_hi(digits)},
                        {"bits", static_cast<long>(x.precision())}};
}

namespace {

ordered_json mpz_json(const mpz_class& z) {
    if (z.fits_slong_p()) return ordered_json(z.get_si());
    return ordered_json(z.get_str());
}

ordered_json item_json(const SweepItem& it) {
    ordered_json j;
    j["k"] = it.k;
    if (it.l >= 0) j["l"] = it.l;
    return j;
}

ordered_json sweep_case_json(const SweepCaseResult& r) {
    ordered_json j;
    j["name"] = r.name;
    j["tau"] = r.tau_name;
    j["convergent_index"] = r.conv_index;
    j["q"] = r.q.get_str();
    j["A"] = r.A_desc;
    j["B"] = r.B_name;
    j["items"] = r.item_count;
    ordered_json ladder = ordered_json::array();
    for (const auto& [idx, q] : r.ladder)
        ladder.push_back(ordered_json{{"index", idx}, {"q", q.get_str()}});
    j["convergent_ladder"] = ladder;
    if (r.has_base_positive) {
        j["min_eps_lo"] = decimal_lower(r.min_eps_lo, 20);
        j["min_eps_at"] = item_json(r.min_eps_item);
    }
    if (r.published_threshold) {
        j["published_threshold"] = decimal_lower(*r.published_threshold, 6);
        j["threshold_certified"] = r.threshold_ok;
    }
    ordered_json negs = ordered_json::array();
    for (const auto& it : r.negative_at_base) negs.push_back(item_json(it));
    j["negative_at_base_convergent"] = negs;
    ordered_json escs = ordered_json::array();
    for (const auto& e : r.escalations) {
        ordered_json ej;
        ej["item"] = item_json(e.item);
        ej["from_index"] = e.from_index;
        ej["to_index"] = e.to_index;
        ej["eps_hi_before"] = e.eps_hi_before;
        ej["eps_lo_after"] = e.eps_lo_after;
        escs.push_back(std::move(ej));
    }
    j["escalations"] = escs;
    if (r.rescued_min_eps_lo) {
        j["rescued_min_eps_lo"] = decimal_lower(*r.rescued_min_eps_lo, 20);
        if (r.rescue_threshold) {
            j["rescue_threshold"] = decimal_lower(*r.rescue_threshold, 6);
            j["rescue_threshold_certified"] = r.rescue_threshold_ok;
        }
        j["bound_rescued"] = mpz_json(r.bound_rescued);
    }
    ordered_json undec = ordered_json::array();
    for (const auto& it : r.undecided) undec.push_back(item_json(it));
    j["undecided"] = undec;
    if (r.has_base_positive) j["bound_base"] = mpz_json(r.bound_base);
    j["bound"] = mpz_json(r.bound);
    j["ok"] = r.ok;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ordered_json stage0_case_json(const Stage0Case& c) {
    ordered_json j;
    j["name"] = c.name;
    j["tau"] = c.tau_name;
    j["convergent_index"] = c.conv_index;
    j["q"] = c.q.get_str();
    j["eps_lo"] = decimal_lower(c.eps_lo, 20);
    j["published_threshold"] = decimal_lower(c.threshold, 6);
    j["threshold_certified"] = c.threshold_ok;
    j["n_gap_bound"] = mpz_json(c.n_gap_bound);
    j["m_gap_bound"] = mpz_json(c.m_gap_bound);
    j["precision_bits"] = static_cast<long>(c.used_prec);
    j["ok"] = c.ok;
    return j;
}

ordered_json named_checks_json(const std::vector<NamedCheck>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks)
        arr.push_back(ordered_json{{"name", c.name}, {"statement", c.statement},
                                   {"pass", c.pass}});
    return arr;
}

} // namespace

ordered_json constants_json(const AlgebraicConstants& c) {
    ordered_json j;
    j["precision_bits"] = static_cast<long>(c.prec);
    j["sqrt5"] = creal_json(c.sqrt5);
    j["alpha"] = creal_json(c.alpha);
    j["beta"] = creal_json(c.beta);
    j["alpha_T"] = creal_json(c.alpha_T);
    j["beta_T_abs"] = creal_json(c.beta_T_abs);
    j["gamma_T_abs"] = creal_json(c.gamma_T_abs);
    j["c_alpha"] = creal_json(c.c_alpha);
    j["c_beta_abs"] = creal_json(c.c_beta_abs);
    j["c_gamma_abs"] = creal_json(c.c_gamma_abs);
    j["log_alpha"] = creal_json(c.log_alpha);
    j["log_alpha_T"] = creal_json(c.log_alpha_T);
    j["tau"] = creal_json(c.tau);
    j["tau_inv"] = creal_json(c.tau_inv);
    return j;
}

ordered_json search_json(const std::vector<SolutionRecord>& records) {
    ordered_json solutions = ordered_json::array();
    for (const auto& rec : records) {
        ordered_json reps = ordered_json::array();
        for (const auto& rep : rec.reps) {
            reps.push_back(ordered_json{{"n", rep.n},
                                        {"m", rep.m},
                                        {"F", mpz_json(rep.f_value)},
                                        {"T", mpz_json(rep.t_value)}});
        }
        solutions.push_back(ordered_json{{"c", mpz_json(rec.c)}, {"reps", std::move(reps)}});
    }
    return ordered_json{{"solutions", std::move(solutions)}};
}

ordered_json bounds_json(const BoundsReport& rep) {
    ordered_json j;
    j["baker_wustholz_C36"] = creal_json(rep.bw_constant);
    j["baker_wustholz_prefactor"] = rep.bw_prefactor.get_str();
    j["height_sqrt5_c_alpha"] = creal_json(rep.height.value);
    j["height_residual_contains_zero"] = rep.height.residual_contains_zero;
    j["min_gap_coefficient"] = creal_json(rep.min_gap.coefficient);
    j["min_gap_checks"] = named_checks_json(rep.min_gap.checks);
    j["max_gap_coefficient"] = creal_json(rep.max_gap.coefficient);
    j["max_gap_checks"] = named_checks_json(rep.max_gap.checks);
    j["global_coefficient"] = creal_json(rep.global_result.coefficient);
    j["global_bound"] = rep.global_result.bound.get_str();
    j["global_bound_crossover"] = ordered_json{{"lo", rep.global_result.crossover_lo.get_str()},
                                        {"hi", rep.global_result.crossover_hi.get_str()}};
    j["global_bound_checks"] = named_checks_json(rep.global_result.checks);
    j["fallback_checks"] = named_checks_json(rep.absorption.checks);
    j["ok"] = rep.ok;
    if (!rep.error.empty()) j["error"] = rep.error;
    return j;
}

ordered_json campaign_json(const CampaignReport& rep) {
    ordered_json j;
    j["M"] = rep.M.get_str();
    ordered_json assumptions = ordered_json::array();
    for (const auto& a : rep.assumptions)
        assumptions.push_back(ordered_json{{"name", a.name},
                                           {"statement", a.statement},
                                           {"certified", a.certified}});
    j["assumptions"] = assumptions;
    ordered_json audits = ordered_json::array();
    for (const auto& a : rep.convergent_audits)
        audits.push_back(ordered_json{{"tau", a.tau_name},
                                      {"configured_index", a.configured_index},
                                      {"first_index_exceeding_6M", a.first_exceeding_6m},
                                      {"q", a.q.get_str()},
                                      {"q_exceeds_6M", a.q_exceeds_6m}});
    j["convergent_audits"] = audits;
    j["stage0"] = ordered_json{{"pos", stage0_case_json(rep.stage0.pos)},
                               {"neg", stage0_case_json(rep.stage0.neg)},
                               {"n_gap_bound", rep.stage0.n_gap_bound},
                               {"m_gap_bound", rep.stage0.m_gap_bound},
                               {"ok", rep.stage0.ok}};
    auto stage_json = [](const StageSweepResult& s) {
        return ordered_json{{"pos", sweep_case_json(s.pos)},
                            {"neg", sweep_case_json(s.neg)},
                            {"bound", s.bound},
                            {"ok", s.ok}};
    };
    j["stage1"] = stage_json(rep.stage1);
    j["stage2"] = stage_json(rep.stage2);
    j["stage3"] = stage_json(rep.stage3);
    j["final_n_bound"] = rep.final_n_bound;
    j["contradicts_n_geq_300"] = rep.contradiction_with_300;
    if (rep.global_bound_hypothesis) j["global_bound_hypothesis"] = rep.global_bound_hypothesis->get_str();
    j["hypothesis_covers_global_bound"] = rep.hypothesis_covers_global_bound;
    j["proof_complete"] = rep.proof_complete;
    j["failures"] = rep.failures;
    return j;
}

ordered_json report_json(const VerifyReport& rep) {
    ordered_json j;
    j["version"] = rep.version;
    j["timestamp"] = rep.timestamp;
    j["precision_policy"] = ordered_json{
        {"initial_bits", static_cast<long>(rep.config.precision.initial)},
        {"max_bits", static_cast<long>(rep.config.precision.max)},
        {"escalation_factor", rep.config.precision.factor}};
    j["ranges"] = ordered_json{{"n_max", rep.config.n_max}, {"m_max", rep.config.m_max}};
    j["constants"] = ordered_json{{"brackets_ok", rep.constants.brackets_ok},
                                  {"residuals_ok", rep.constants.residuals_ok},
                                  {"tau_product_ok", rep.constants.tau_product_ok},
                                  {"radical_crosscheck_ok", rep.constants.radical_crosscheck_ok},
                                  {"ok", rep.constants.ok}};
    j["sequences"] = ordered_json{{"recurrences_ok", rep.sequences.recurrences_ok},
                                  {"cross_identity_ok", rep.sequences.cross_identity_ok},
                                  {"difference_identity_ok", rep.sequences.difference_identity_ok},
                                  {"growth_fibonacci_ok", rep.sequences.growth_fibonacci_ok},
                                  {"growth_tribonacci_ok", rep.sequences.growth_tribonacci_ok},
                                  {"binet_ok", rep.sequences.binet_ok},
                                  {"ok", rep.sequences.ok}};
    ordered_json sj;
    sj["record_count"] = rep.search_result.record_count;
    sj["representation_count"] = rep.search_result.representation_count;
    sj["golden_table_pass"] = rep.search_result.verdict.pass;
    sj["missing"] = rep.search_result.verdict.missing;
    sj["extra"] = rep.search_result.verdict.extra;
    sj["result"] = search_json(rep.search_result.records);
    j["search"] = std::move(sj);
    j["bounds"] = bounds_json(rep.bounds);
    j["campaign"] = campaign_json(rep.campaign);
    j["overall"] = rep.overall;
    if (!rep.failed_step.empty()) j["failed_step"] = rep.failed_step;
    j["exit_code"] = rep.exit_code;
    return j;
}

std::string report_text(const VerifyReport& rep) {
    std::ostringstream os;
    os << "fibtri verify " << rep.version << " (" << rep.timestamp << ")\n";
    os << "precision: initial " << rep.config.precision.initial << " bits, max "
       << rep.config.precision.max << " bits\n\n";
    os << "constants:  " << (rep.constants.ok ? "ok" : "FAILED") << "\n";
    os << "sequences:  " << (rep.sequences.ok ? "ok" : "FAILED") << "\n";
    os << "search:     " << rep.search_result.record_count << " integers, "
       << rep.search_result.representation_count << " representations, golden table "
       << (rep.search_result.verdict.pass ? "ok" : "FAILED") << "\n";
    for (const auto& rec : rep.search_result.records) {
        os << "  " << rec.c.get_str() << " =";
        bool first = true;
        for (const auto& r : rec.reps) {
            if (!first) os << " =";
            os << " " << r.f_value.get_str() << " - " << r.t_value.get_str();
            first = false;
        }
        os << "   (";
        first = true;
        for (const auto& r : rec.reps) {
            if (!first) os << " = ";
            os << "F_" << r.n << " - T_" << r.m;
            first = false;
        }
        os << ")\n";
    }
    os << "bounds:     " << (rep.bounds.ok ? "ok" : "FAILED " + rep.bounds.error) << "\n";
    if (rep.bounds.ok) {
        os << "  C(3,6) in " << rep.bounds.bw_constant.to_string(8) << "\n";
        os << "  proposition 1: n < " << rep.bounds.global_result.bound.get_str() << "\n";
    }
    os << "campaign:   " << (rep.campaign.proof_complete ? "ok" : "FAILED") << "\n";
    if (rep.campaign.stage0.ok) {
        os << "  stage0: n-n1 <= " << rep.campaign.stage0.n_gap_bound << " or m-m1 <= "
           << rep.campaign.stage0.m_gap_bound << "\n";
        os << "  stage1: m-m1 <= " << rep.campaign.stage1.bound << "\n";
        os << "  stage2: n-n1 <= " << rep.campaign.stage2.bound << "\n";
        os << "  stage3: n <= " << rep.campaign.stage3.bound << "\n";
    }
    for (const auto& f : rep.campaign.failures) os << "  failure: " << f << "\n";
    os << "\noverall: " << rep.overall << "\n";
    return os.str();
}

} // namespace fibtri
