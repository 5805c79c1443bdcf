#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "fibtri/campaign.hpp"
#include "fibtri/creal.hpp"

namespace fibtri {

// Run parameters. Every default reproduces the published computation; the
// file format is plain "key = value" lines with '#' comments.
struct RunConfig {
    PrecisionPolicy precision{};
    int workers = 0;  // 0: use all hardware threads
    std::size_t n_max = 300;
    std::size_t m_max = 240;
    mpz_class campaign_M;
    std::size_t tau_conv_index = 104;
    std::size_t tau_inv_conv_index = 103;
    int escalation_limit = 3;
    std::size_t expansion_terms = 120;
    std::string golden_table_path;

    static RunConfig defaults();
    static RunConfig from_file(const std::string& path);

    void apply_line(const std::string& key, const std::string& value);
    void validate() const;
    CampaignConfig campaign_config() const;
    int effective_workers() const;
};

} // namespace fibtri
