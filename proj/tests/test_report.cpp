#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "fibtri/contfrac.hpp"
#include "fibtri/numutil.hpp"
#include "fibtri/report.hpp"

using namespace fibtri;

#ifndef FIBTRI_GOLDEN_PATH
#define FIBTRI_GOLDEN_PATH "data/golden_solutions.json"
#endif
#ifndef FIBTRI_CLI_PATH
#define FIBTRI_CLI_PATH "fibtri"
#endif

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(FIBTRI_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/fibtri_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("config parsing") {
    std::string good = write_temp("good.conf",
                                  "# comment\n"
                                  "precision_init = 512\n"
                                  "workers = 2\n"
                                  "campaign_m = 8e51\n");
    RunConfig cfg = RunConfig::from_file(good);
    CHECK(cfg.precision.initial == 512);
    CHECK(cfg.workers == 2);
    CHECK(cfg.campaign_M == mpz_from_scientific("8e51"));

    std::string bad_key = write_temp("badkey.conf", "frobnicate = 1\n");
    CHECK_THROWS_AS(RunConfig::from_file(bad_key), ConfigError);
    std::string bad_val = write_temp("badval.conf", "workers = many\n");
    CHECK_THROWS_AS(RunConfig::from_file(bad_val), ConfigError);
    std::string bad_prec = write_temp("badprec.conf", "precision_init = 16\n");
    CHECK_THROWS_AS(RunConfig::from_file(bad_prec), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_file("/nonexistent/x.conf"), ConfigError);
}

TEST_CASE("verify: golden-table defect gives exit 1") {
    // a golden file with one representation removed from c = 0
    std::ifstream in(FIBTRI_GOLDEN_PATH);
    nlohmann::json j = nlohmann::json::parse(in);
    auto& reps = j["solutions"][0]["reps"];
    REQUIRE(reps.size() == 3);
    reps.erase(2);
    std::string perturbed = write_temp("perturbed_golden.json", j.dump());

    RunConfig cfg = RunConfig::defaults();
    cfg.golden_table_path = perturbed;
    cfg.workers = 1;
    VerifyReport rep = verify(cfg);
    CHECK(rep.exit_code == 1);
    CHECK(rep.overall == "FAILED(search)");
    CHECK_FALSE(rep.search_result.verdict.pass);
    CHECK(rep.search_result.verdict.extra.size() == 1);
}

TEST_CASE("verify: missing golden table gives exit 5") {
    RunConfig cfg = RunConfig::defaults();
    cfg.golden_table_path = "/nonexistent/golden.json";
    VerifyReport rep = verify(cfg);
    CHECK(rep.exit_code == 5);
}

TEST_CASE("verify: 64-bit precision cap gives exit 4") {
    RunConfig cfg = RunConfig::defaults();
    cfg.precision.initial = 64;
    cfg.precision.max = 64;
    VerifyReport rep = verify(cfg);
    CHECK(rep.exit_code == 4);
}

TEST_CASE("section serialization is deterministic") {
    RunConfig cfg = RunConfig::defaults();
    CampaignConfig cc = cfg.campaign_config();
    cc.workers = 2;

    Stage0Result a = run_stage0(cc);
    Stage0Result b = run_stage0(cc);
    // byte-identical JSON for repeated runs
    ordered_json ja{{"pos_eps", decimal_lower(a.pos.eps_lo, 30)},
                    {"neg_eps", decimal_lower(a.neg.eps_lo, 30)},
                    {"n", a.n_gap_bound},
                    {"m", a.m_gap_bound}};
    ordered_json jb{{"pos_eps", decimal_lower(b.pos.eps_lo, 30)},
                    {"neg_eps", decimal_lower(b.neg.eps_lo, 30)},
                    {"n", b.n_gap_bound},
                    {"m", b.m_gap_bound}};
    CHECK(ja.dump() == jb.dump());

    auto r1 = search(300, 240, 3);
    auto r2 = search(300, 240, 1);  // worker count must not change the output
    CHECK(search_json(r1).dump() == search_json(r2).dump());

    const auto& C = AlgebraicConstants::at(1024);
    CHECK(bounds_json(run_bounds_chain(C)).dump() == bounds_json(run_bounds_chain(C)).dump());
}

TEST_CASE("full verify replays the proof, byte-identically") {
    RunConfig cfg = RunConfig::defaults();
    VerifyReport rep = verify(cfg);
    CHECK(rep.exit_code == 0);
    CHECK(rep.overall == "PROOF-REPLAYED");
    CHECK(rep.campaign.final_n_bound == 291);
    CHECK(rep.campaign.stage0.n_gap_bound == 271);
    CHECK(rep.campaign.stage0.m_gap_bound == 212);
    CHECK(rep.campaign.stage1.bound == 219);
    CHECK(rep.campaign.stage2.bound == 279);

    // the one failing sweep item at the base convergent is k = 90, rescued at
    // the next convergent with the published bound
    const SweepCaseResult& s2 = rep.campaign.stage2.pos;
    REQUIRE(s2.negative_at_base.size() == 1);
    CHECK(s2.negative_at_base[0].k == 90);
    REQUIRE(s2.escalations.size() == 1);
    CHECK(s2.escalations[0].from_index == 104);
    CHECK(s2.escalations[0].to_index == 105);
    CHECK(s2.bound_rescued == 274);
    CHECK(rep.campaign.stage3.pos.bound_rescued == 285);
    CHECK(rep.campaign.stage3.neg.bound == 288);
    CHECK(rep.campaign.stage3.pos.undecided.empty());
    CHECK(rep.campaign.stage3.neg.undecided.empty());

    ordered_json j = report_json(rep);
    CHECK(j["overall"] == "PROOF-REPLAYED");
    for (const char* key : {"version", "timestamp", "precision_policy", "ranges", "constants",
                            "sequences", "search", "bounds", "campaign", "overall", "exit_code"})
        CHECK(j.contains(key));
    // the published 105th convergent appears verbatim in the campaign section
    std::string dump = j["campaign"].dump();
    CHECK(dump.find("20120013979896675119357414743592977629715414121119669783") !=
          std::string::npos);

    std::string text = report_text(rep);
    CHECK(text.find("-22 = 2 - 24 = 121393 - 121415") != std::string::npos);
    CHECK(text.find("PROOF-REPLAYED") != std::string::npos);

    // identical config, second run: byte-identical JSON apart from the timestamp
    cfg.workers = 2;  // thread count must not affect the folded report either
    VerifyReport rep2 = verify(cfg);
    ordered_json j2 = report_json(rep2);
    j["timestamp"] = "";
    j2["timestamp"] = "";
    CHECK(j.dump() == j2.dump());
}

TEST_CASE("campaign with a weaker hypothesis is not proof-complete") {
    CampaignConfig cc = RunConfig::defaults().campaign_config();
    cc.M = mpz_from_scientific("1e10");
    // exploratory M: low-index convergents, bounds from the computed epsilons
    cc.use_published_thresholds = false;
    cc.escalation_limit = 8;
    cc.tau_conv_index = first_denominator_exceeding(tau_refiner(), 6 * cc.M).k;
    cc.tau_inv_conv_index = first_denominator_exceeding(tau_inv_refiner(), 6 * cc.M).k;
    CampaignReport rep = run_campaign(cc, mpz_from_scientific("8e51"));
    CHECK(rep.failures.empty());
    CHECK(rep.final_n_bound > 0);
    CHECK(rep.final_n_bound < 291);  // bounds shrink with log M
    CHECK_FALSE(rep.hypothesis_covers_global_bound);
    CHECK_FALSE(rep.proof_complete);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("seq fibonacci 26") == 0);
    CHECK(run_cli("seq fibonacci -3") == 5);  // negative index rejected at parse
    std::string bad = write_temp("cli_bad.conf", "nonsense = 1\n");
    CHECK(run_cli("constants --config " + bad) == 5);
    CHECK(run_cli("cf --target tau --terms 12") == 0);
}
