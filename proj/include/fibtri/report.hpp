#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "fibtri/bounds.hpp"
#include "fibtri/campaign.hpp"
#include "fibtri/config.hpp"
#include "fibtri/search.hpp"

namespace fibtri {

using ordered_json = nlohmann::ordered_json;

struct ConstantsSection {
    bool brackets_ok = false;       // computed constants inside the published brackets
    bool residuals_ok = false;      // characteristic-polynomial residuals contain 0
    bool tau_product_ok = false;    // tau * tau_inv encloses 1
    bool radical_crosscheck_ok = false;  // nested-radical formulas agree at 64 bits
    bool ok = false;
};

struct SequencesSection {
    bool recurrences_ok = false;
    bool cross_identity_ok = false;   // L_k^2 - 5 F_k^2 = 4 (-1)^k
    bool difference_identity_ok = false;  // T_m - T_{m-1} = T_{m-2} + T_{m-3}
    bool growth_fibonacci_ok = false;
    bool growth_tribonacci_ok = false;
    bool binet_ok = false;
    bool ok = false;
};

struct SearchSection {
    long record_count = 0;
    long representation_count = 0;
    TableVerdict verdict;
    std::vector<SolutionRecord> records;
    bool ok = false;
};

struct VerifyReport {
    std::string version;
    std::string timestamp;
    RunConfig config;
    ConstantsSection constants;
    SequencesSection sequences;
    SearchSection search_result;
    BoundsReport bounds;
    CampaignReport campaign;
    std::string overall;   // "PROOF-REPLAYED" or "FAILED(step)"
    std::string failed_step;
    int exit_code = 0;     // 0 ok, 1 search, 2 bounds, 3 campaign, 4 precision, 5 config
};

// Runs the complete pipeline: constants, sequence checks, brute force +
// golden comparison, the bounds chain and the reduction campaign.
VerifyReport verify(const RunConfig& cfg);

ordered_json report_json(const VerifyReport& rep);
std::string report_text(const VerifyReport& rep);

// Section serializers shared with the CLI subcommands.
ordered_json creal_json(const CReal& x, int digits = 40);
ordered_json constants_json(const AlgebraicConstants& c);
ordered_json search_json(const std::vector<SolutionRecord>& records);
ordered_json bounds_json(const BoundsReport& rep);
ordered_json campaign_json(const CampaignReport& rep);

std::string version_string();

} // namespace fibtri
