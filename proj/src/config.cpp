#include "fibtri/config.hpp"

#include <fstream>
#include <sstream>

#include "fibtri/numutil.hpp"
#include "fibtri/parallel.hpp"

#ifndef FIBTRI_DATA_DIR
#define FIBTRI_DATA_DIR "data"
#endif

namespace fibtri {

RunConfig RunConfig::defaults() {
    RunConfig c;
    c.campaign_M = mpz_from_scientific("8e51");
    c.golden_table_path = std::string(FIBTRI_DATA_DIR) + "/golden_solutions.json";
    return c;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    std::size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

void RunConfig::apply_line(const std::string& key, const std::string& value) {
    try {
        if (key == "precision_init") precision.initial = std::stol(value);
        else if (key == "precision_max") precision.max = std::stol(value);
        else if (key == "workers") workers = std::stoi(value);
        else if (key == "n_max") n_max = std::stoul(value);
        else if (key == "m_max") m_max = std::stoul(value);
        else if (key == "campaign_m") campaign_M = mpz_from_scientific(value);
        else if (key == "tau_convergent_index") tau_conv_index = std::stoul(value);
        else if (key == "tau_inv_convergent_index") tau_inv_conv_index = std::stoul(value);
        else if (key == "escalation_limit") escalation_limit = std::stoi(value);
        else if (key == "expansion_terms") expansion_terms = std::stoul(value);
        else if (key == "golden_table") golden_table_path = value;
        else throw ConfigError("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad value for " + key + ": " + value);
    } catch (const std::out_of_range&) {
        throw ConfigError("bad value for " + key + ": " + value);
    }
}

void RunConfig::validate() const {
    if (precision.initial < CReal::kMinPrec)
        throw ConfigError("precision_init below the 64-bit minimum");
    if (precision.max < precision.initial)
        throw ConfigError("precision_max below precision_init");
    if (n_max < 3 || m_max < 3) throw ConfigError("n_max and m_max must be at least 3");
    if (escalation_limit < 0) throw ConfigError("escalation_limit must be non-negative");
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    RunConfig c = defaults();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        c.apply_line(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    c.validate();
    return c;
}

CampaignConfig RunConfig::campaign_config() const {
    CampaignConfig cc = CampaignConfig::defaults();
    cc.M = campaign_M;
    cc.tau_conv_index = tau_conv_index;
    cc.tau_inv_conv_index = tau_inv_conv_index;
    cc.escalation_limit = escalation_limit;
    cc.workers = effective_workers();
    cc.precision = precision;
    return cc;
}

int RunConfig::effective_workers() const {
    return workers > 0 ? workers : default_workers();
}

} // namespace fibtri
