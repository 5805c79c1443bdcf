#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "fibtri/bounds.hpp"
#include "fibtri/campaign.hpp"
#include "fibtri/constants.hpp"
#include "fibtri/contfrac.hpp"
#include "fibtri/numutil.hpp"
#include "fibtri/report.hpp"
#include "fibtri/search.hpp"
#include "fibtri/sequences.hpp"

using namespace fibtri;

namespace {

void write_json(const ordered_json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << j.dump(2) << "\n";
}

Refinable target_refiner(const std::string& name) {
    if (name == "tau") return tau_refiner();
    if (name == "tau-inv" || name == "tau_inv") return tau_inv_refiner();
    throw ConfigError("unknown target: " + name + " (expected tau or tau-inv)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified replay of the Fibonacci-minus-Tribonacci double-representation "
                 "computation"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string json_path, config_path;
    long precision_max = 0;
    int workers = 0;
    app.add_option("--json", json_path, "write the JSON report to this path ('-' = stdout)");
    app.add_option("--precision-max", precision_max, "maximum working precision in bits");
    app.add_option("--workers", workers, "worker threads for the sweeps");
    app.add_option("--config", config_path, "key = value configuration file");

    auto* cmd_verify = app.add_subcommand("verify", "run the complete pipeline");
    bool verify_quiet = false;
    cmd_verify->add_flag("--quiet", verify_quiet, "suppress the text report");

    auto* cmd_search = app.add_subcommand("search", "brute-force double representations");
    std::size_t n_max = 300, m_max = 240;
    cmd_search->add_option("--n-max", n_max, "exclusive upper index for F");
    cmd_search->add_option("--m-max", m_max, "exclusive upper index for T");

    auto* cmd_seq = app.add_subcommand("seq", "print exact sequence values");
    std::string seq_kind;
    long seq_index = 0;
    cmd_seq->add_option("kind", seq_kind, "fibonacci|lucas|tribonacci")->required();
    cmd_seq->add_option("k", seq_index, "index (non-negative)")->required();

    auto* cmd_constants = app.add_subcommand("constants", "print certified enclosures");

    auto* cmd_cf = app.add_subcommand("cf", "continued fraction of tau or 1/tau");
    std::string cf_target = "tau";
    std::size_t cf_terms = 0;  // 0: use the configured expansion depth
    bool cf_convergents = false;
    cmd_cf->add_option("--target", cf_target, "tau|tau-inv");
    cmd_cf->add_option("--terms", cf_terms, "number of partial quotients");
    cmd_cf->add_flag("--convergents", cf_convergents, "also print exact p_k, q_k");

    auto* cmd_reduce = app.add_subcommand("reduce", "one reduction-lemma instance");
    std::string rd_tau = "tau", rd_mu, rd_A = "1", rd_B = "alpha", rd_M = "8e51";
    long rd_k = -1, rd_l = -1;
    std::size_t rd_index = 104;
    cmd_reduce->add_option("--tau", rd_tau, "tau|tau-inv");
    cmd_reduce->add_option("--mu-expr", rd_mu, "stage0+|stage0-|stage1+|...|stage3-")->required();
    cmd_reduce->add_option("--k", rd_k, "gap parameter k");
    cmd_reduce->add_option("--l", rd_l, "gap parameter l");
    cmd_reduce->add_option("--A", rd_A, "lemma parameter A (decimal)");
    cmd_reduce->add_option("--B", rd_B, "lemma parameter B: alpha|alphaT");
    cmd_reduce->add_option("--M", rd_M, "lemma parameter M (integer, scientific ok)");
    cmd_reduce->add_option("--convergent-index", rd_index, "convergent index of tau");

    auto* cmd_campaign = app.add_subcommand("campaign", "the four-stage reduction campaign");
    std::string cp_M = "8e51";
    cmd_campaign->add_option("--M", cp_M, "campaign M (integer, scientific ok)");

    auto* cmd_bounds = app.add_subcommand("bounds", "certified coefficient chain");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = config_path.empty() ? RunConfig::defaults()
                                            : RunConfig::from_file(config_path);
        if (precision_max > 0) {
            cfg.precision.max = precision_max;
            if (cfg.precision.initial > cfg.precision.max)
                cfg.precision.initial = cfg.precision.max;
        }
        if (workers > 0) cfg.workers = workers;
        cfg.validate();

        if (*cmd_verify) {
            VerifyReport rep = verify(cfg);
            if (!verify_quiet) std::cout << report_text(rep);
            if (!json_path.empty()) write_json(report_json(rep), json_path);
            return rep.exit_code;
        }

        if (*cmd_search) {
            auto records = search(n_max, m_max, cfg.effective_workers());
            ordered_json j = search_json(records);
            write_json(j, json_path);
            return 0;
        }

        if (*cmd_seq) {
            if (seq_index < 0) throw ConfigError("negative index");
            std::cout << shared_table(seq_kind_from_string(seq_kind))
                             .at(static_cast<std::size_t>(seq_index))
                             .get_str()
                      << "\n";
            return 0;
        }

        if (*cmd_constants) {
            const auto& C = AlgebraicConstants::at(cfg.precision.initial);
            ordered_json j = constants_json(C);
            write_json(j, json_path);
            return 0;
        }

        if (*cmd_cf) {
            if (cf_terms == 0) cf_terms = cfg.expansion_terms;
            Refinable x = target_refiner(cf_target);
            auto quotients = cf_expand(x, cf_terms, cfg.precision);
            ordered_json j;
            j["target"] = cf_target;
            ordered_json qs = ordered_json::array();
            for (const auto& a : quotients) qs.push_back(a.get_str());
            j["quotients"] = qs;
            if (cf_convergents) {
                ordered_json cs = ordered_json::array();
                for (const auto& c : convergents(quotients, cf_terms - 1))
                    cs.push_back(ordered_json{{"k", c.k},
                                              {"a", c.a.get_str()},
                                              {"p", c.p.get_str()},
                                              {"q", c.q.get_str()}});
                j["convergents"] = cs;
            }
            write_json(j, json_path);
            return 0;
        }

        if (*cmd_reduce) {
            Refinable tau = target_refiner(rd_tau);
            NamedMu mu = named_mu_form(rd_mu, rd_k, rd_l);
            Convergent conv = convergent_at(tau, rd_index, cfg.precision);
            Prec p = cfg.precision.initial;
            CReal A = CReal::from_rational(mpq_from_decimal(rd_A), p);
            const auto& C = AlgebraicConstants::at(p);
            CReal B = (rd_B == "alpha") ? C.alpha
                      : (rd_B == "alphaT" || rd_B == "alpha_T")
                          ? C.alpha_T
                          : throw ConfigError("unknown B: " + rd_B);
            ReductionInstance inst = make_instance("cli", tau, mu.mu, A, B,
                                                   mpz_from_scientific(rd_M), conv.q);
            ReductionOutcome out = dujella_epsilon(inst, cfg.precision);
            ordered_json j;
            j["tau"] = rd_tau;
            j["mu"] = mu.desc;
            j["convergent_index"] = conv.k;
            j["q"] = conv.q.get_str();
            j["status"] = to_string(out.status);
            j["epsilon"] = creal_json(out.epsilon, 20);
            j["precision_bits"] = static_cast<long>(out.used_prec);
            if (out.k_bound) j["k_bound"] = out.k_bound->get_str();
            write_json(j, json_path);
            return 0;
        }

        if (*cmd_campaign) {
            CampaignConfig cc = cfg.campaign_config();
            cc.M = mpz_from_scientific(cp_M);
            const auto& C = AlgebraicConstants::at(cfg.precision.initial);
            std::optional<mpz_class> certified_bound;
            BoundsReport bounds = run_bounds_chain(C, PublishedBoundConstants::defaults(),
                                                   cfg.precision);
            if (bounds.ok) certified_bound = bounds.global_result.bound;
            CampaignReport rep = run_campaign(cc, certified_bound);
            write_json(campaign_json(rep), json_path);
            if (!rep.failures.empty()) return 3;
            return 0;
        }

        if (*cmd_bounds) {
            const auto& C = AlgebraicConstants::at(cfg.precision.initial);
            BoundsReport rep = run_bounds_chain(C, PublishedBoundConstants::defaults(),
                                                cfg.precision);
            write_json(bounds_json(rep), json_path);
            return rep.ok ? 0 : 2;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 5;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 4;
    } catch (const CertificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
