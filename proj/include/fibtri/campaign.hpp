#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibtri/constants.hpp"
#include "fibtri/contfrac.hpp"
#include "fibtri/reduction.hpp"

namespace fibtri {

// Parameters of the four-stage reduction campaign. The A/B pairs, the
// convergent indices and the epsilon thresholds ship as data so the
// configuration can be audited line by line.
struct CampaignConfig {
    mpz_class M;                        // upper bound hypothesis on the lemma's m
    std::size_t tau_conv_index = 104;   // convergent of log(alpha)/log(alpha_T)
    std::size_t tau_inv_conv_index = 103;
    int escalation_limit = 3;           // convergent steps tried after a failure
    int workers = 1;
    PrecisionPolicy precision{};
    // When true (the shipped configuration), each sweep certifies its epsilon
    // against the published threshold and the k-bounds are computed from the
    // thresholds; when false (exploratory M values), bounds come from the
    // computed certified minima instead.
    bool use_published_thresholds = true;

    // published epsilon thresholds; certification demands our epsilon exceeds
    // them, and the k-bounds are then computed from the thresholds themselves
    mpq_class eps_stage0_pos;   // 0.068
    mpq_class eps_stage0_neg;   // 0.067
    mpq_class eps_stage1_pos;   // 0.00038
    mpq_class eps_stage2_pos;   // 0.0012
    mpq_class eps_stage2_rescue;  // 0.46
    mpq_class eps_stage3_pos;   // 2.8e-6
    mpq_class eps_stage3_rescue;  // 0.0018

    static CampaignConfig defaults();
};

struct SweepItem {
    long k = -1;
    long l = -1;
};

struct EscalationRecord {
    SweepItem item;
    std::size_t from_index = 0;
    std::size_t to_index = 0;
    std::string eps_hi_before;  // certified negative upper bound at the previous q
    std::string eps_lo_after;   // certified positive lower bound after escalation
};

// Result of one sign case of one sweep stage.
struct SweepCaseResult {
    std::string name;
    std::string tau_name;
    std::size_t conv_index = 0;
    mpz_class q;
    std::string A_desc;
    std::string B_name;
    long item_count = 0;
    std::vector<std::pair<std::size_t, mpz_class>> ladder;  // (index, q) incl. escalations

    bool has_base_positive = false;
    mpq_class min_eps_lo;                 // over items positive at the base convergent
    SweepItem min_eps_item;
    std::vector<SweepItem> negative_at_base;
    std::vector<EscalationRecord> escalations;
    std::vector<SweepItem> undecided;

    std::optional<mpq_class> published_threshold;
    bool threshold_ok = true;
    std::optional<mpq_class> rescue_threshold;
    bool rescue_threshold_ok = true;
    std::optional<mpq_class> rescued_min_eps_lo;

    mpz_class bound_base{0};
    mpz_class bound_rescued{0};
    mpz_class bound{0};
    bool ok = true;
    std::string note;
};

// Stage 0 applies one instance per sign case with two (A, B) pairs.
struct Stage0Case {
    std::string name;
    std::string tau_name;
    std::size_t conv_index = 0;
    mpz_class q;
    mpq_class eps_lo;
    mpq_class threshold;
    bool threshold_ok = false;
    mpz_class n_gap_bound{0};
    mpz_class m_gap_bound{0};
    Prec used_prec = 0;
    bool ok = false;
};

struct Stage0Result {
    Stage0Case pos, neg;
    long n_gap_bound = 0;
    long m_gap_bound = 0;
    bool ok = false;
};

struct StageSweepResult {
    SweepCaseResult pos, neg;
    long bound = 0;
    bool ok = false;
};

struct AssumptionCheck {
    std::string name;
    std::string statement;
    bool certified = false;
};

struct ConvergentAudit {
    std::string tau_name;
    std::size_t configured_index = 0;
    std::size_t first_exceeding_6m = 0;
    mpz_class q;
    bool q_exceeds_6m = false;
};

struct CampaignReport {
    mpz_class M;
    std::vector<AssumptionCheck> assumptions;
    std::vector<ConvergentAudit> convergent_audits;
    Stage0Result stage0;
    StageSweepResult stage1, stage2, stage3;
    long final_n_bound = 0;
    bool contradiction_with_300 = false;
    std::optional<mpz_class> global_bound_hypothesis;  // when supplied by the caller
    bool hypothesis_covers_global_bound = false;
    bool proof_complete = false;
    std::vector<std::string> failures;
};

// The named mu expressions of the four stages, addressable from the CLI and
// the bindings: "stage0+", "stage0-", "stage1+", ..., "stage3-". The one-gap
// forms need k >= 1; the stage-3 forms need k and l.
struct NamedMu {
    Refinable mu;
    std::string desc;
};
NamedMu named_mu_form(const std::string& expr, long k = -1, long l = -1);

Stage0Result run_stage0(const CampaignConfig& cfg);
StageSweepResult run_stage1(const CampaignConfig& cfg, long k_max = 271);
StageSweepResult run_stage2(const CampaignConfig& cfg, long k_max = 212);
StageSweepResult run_stage3(const CampaignConfig& cfg, long k_max = 279, long l_max = 219);

// Runs stages 0-3 in order, threading the certified bounds between them,
// and assembles the final report. `global_bound` is the certified bound that
// makes the M hypothesis legitimate; when absent the report is marked not
// proof-complete.
CampaignReport run_campaign(const CampaignConfig& cfg,
                            const std::optional<mpz_class>& global_bound = std::nullopt);

} // namespace fibtri
