#include "fibtri/campaign.hpp"

#include <algorithm>
#include <sstream>

#include "fibtri/numutil.hpp"
#include "fibtri/parallel.hpp"

namespace fibtri {

CampaignConfig CampaignConfig::defaults() {
    CampaignConfig c;
    c.M = mpz_from_scientific("8e51");
    c.eps_stage0_pos = mpq_from_decimal("0.068");
    c.eps_stage0_neg = mpq_from_decimal("0.067");
    c.eps_stage1_pos = mpq_from_decimal("0.00038");
    c.eps_stage2_pos = mpq_from_decimal("0.0012");
    c.eps_stage2_rescue = mpq_from_decimal("0.46");
    c.eps_stage3_pos = mpq_from_decimal("0.0000028");
    c.eps_stage3_rescue = mpq_from_decimal("0.0018");
    c.workers = default_workers();
    return c;
}

namespace {

// --- linear-form data -------------------------------------------------------
//
// Every sign case reduces to 0 < v tau~ - w + mu < A B^-k with v <= M. The
// mu expressions below mirror the four stages: stage 0 uses a fixed mu,
// stages 1 and 2 sweep one gap, stage 3 sweeps both gaps.

Refinable mu_stage0_pos() {
    return [](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        return (CReal(1L, p) / C.sqrt5_c_alpha).log() / C.log_alpha_T;
    };
}

Refinable mu_stage0_neg() {
    return [](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        return C.sqrt5_c_alpha.log() / C.log_alpha;
    };
}

Refinable mu_stage1_pos(long k) {
    return [k](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        return ((C.alpha.pow_int(k) - CReal(1L, p)) / C.sqrt5_c_alpha).log() / C.log_alpha_T;
    };
}

Refinable mu_stage1_neg(long k) {
    return [k](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        return (C.sqrt5_c_alpha / (C.alpha.pow_int(k) - CReal(1L, p))).log() / C.log_alpha;
    };
}

Refinable mu_stage2_pos(long k) {
    return [k](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        CReal denom = C.sqrt5_c_alpha * (C.alpha_T.pow_int(k) - CReal(1L, p));
        return (CReal(1L, p) / denom).log() / C.log_alpha_T;
    };
}

Refinable mu_stage2_neg(long k) {
    return [k](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        return (C.sqrt5_c_alpha * (C.alpha_T.pow_int(k) - CReal(1L, p))).log() / C.log_alpha;
    };
}

Refinable mu_stage3_pos(long k, long l) {
    return [k, l](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        CReal num = C.alpha.pow_int(k) - CReal(1L, p);
        CReal den = C.sqrt5_c_alpha * (C.alpha_T.pow_int(l) - CReal(1L, p));
        return (num / den).log() / C.log_alpha_T;
    };
}

Refinable mu_stage3_neg(long k, long l) {
    return [k, l](Prec p) {
        const auto& C = AlgebraicConstants::at(p);
        CReal num = C.sqrt5_c_alpha * (C.alpha_T.pow_int(l) - CReal(1L, p));
        CReal den = C.alpha.pow_int(k) - CReal(1L, p);
        return (num / den).log() / C.log_alpha;
    };
}

// A parameters for the sign cases without published values: dividing the
// |Lambda| bound c alpha^4 B^-g (resp. alpha_T^2 B^-g) by log(alpha) instead
// of log(alpha_T).
CReal A_alphaT2_over_log_alpha(Prec p) {
    const auto& C = AlgebraicConstants::at(p);
    return C.alpha_T.pow_int(2) / C.log_alpha;
}

CReal A_444_alpha4_over_log_alpha(Prec p) {
    const auto& C = AlgebraicConstants::at(p);
    return CReal::from_rational(mpq_from_decimal("4.44"), p) * C.alpha.pow_int(4) / C.log_alpha;
}

CReal A_328_alpha4_over_log_alpha(Prec p) {
    const auto& C = AlgebraicConstants::at(p);
    return CReal::from_rational(mpq_from_decimal("3.28"), p) * C.alpha.pow_int(4) / C.log_alpha;
}

CReal A_integer(long v, Prec p) { return CReal::from_integer(mpz_class(v), p); }

std::string item_label(const std::string& name, const SweepItem& it) {
    std::ostringstream os;
    os << name;
    if (it.k >= 0) os << "/k=" << it.k;
    if (it.l >= 0) os << ",l=" << it.l;
    return os.str();
}

struct CaseSpec {
    std::string name;
    std::string tau_name;
    Refinable tau;
    std::vector<Convergent> ladder;  // base convergent plus escalation steps
    std::function<Refinable(SweepItem)> mu;
    std::function<CReal(Prec)> A;
    std::string A_desc;
    bool B_is_alpha = true;
    std::optional<mpq_class> threshold;
    std::optional<mpq_class> rescue_threshold;
};

std::vector<Convergent> convergent_ladder(const Refinable& tau, std::size_t base_index,
                                          int extra, const PrecisionPolicy& policy) {
    std::vector<mpz_class> q = cf_expand(tau, base_index + extra + 1, policy);
    std::vector<Convergent> all = convergents(q, base_index + extra);
    return std::vector<Convergent>(all.begin() + static_cast<long>(base_index), all.end());
}

CReal B_value(bool is_alpha, Prec p) {
    const auto& C = AlgebraicConstants::at(p);
    return is_alpha ? C.alpha : C.alpha_T;
}

SweepCaseResult run_sweep(const CampaignConfig& cfg, const CaseSpec& spec,
                          const std::vector<SweepItem>& items) {
    SweepCaseResult res;
    res.name = spec.name;
    res.tau_name = spec.tau_name;
    res.conv_index = spec.ladder.front().k;
    res.q = spec.ladder.front().q;
    res.A_desc = spec.A_desc;
    res.B_name = spec.B_is_alpha ? "alpha" : "alpha_T";
    res.item_count = static_cast<long>(items.size());
    for (const auto& conv : spec.ladder) res.ladder.emplace_back(conv.k, conv.q);
    res.published_threshold = spec.threshold;
    res.rescue_threshold = spec.rescue_threshold;

    CReal A0 = spec.A(cfg.precision.initial);
    CReal B0 = B_value(spec.B_is_alpha, cfg.precision.initial);

    struct ItemOut {
        EpsStatus base_status = EpsStatus::undecided;
        EpsStatus final_status = EpsStatus::undecided;
        int final_pos = 0;
        mpq_class eps_lo;   // for a positive final status
        mpq_class base_hi;  // upper bound of epsilon at the base convergent
        bool precision_exhausted = false;
    };
    std::vector<ItemOut> outs(items.size());

    parallel_for(0, items.size(), cfg.workers, [&](std::size_t i) {
        const SweepItem item = items[i];
        Refinable mu = spec.mu(item);
        ItemOut& slot = outs[i];
        int max_pos = std::min<int>(cfg.escalation_limit,
                                    static_cast<int>(spec.ladder.size()) - 1);
        for (int pos = 0; pos <= max_pos; ++pos) {
            ReductionInstance inst = make_instance(item_label(spec.name, item), spec.tau, mu,
                                                   A0, B0, cfg.M, spec.ladder[pos].q);
            ReductionOutcome out;
            try {
                out = dujella_epsilon(inst, cfg.precision);
            } catch (const PrecisionExhausted&) {
                slot.precision_exhausted = true;
                slot.final_pos = pos;
                return;
            }
            if (pos == 0) {
                slot.base_status = out.status;
                slot.base_hi = out.epsilon.hi_rational();
            }
            slot.final_status = out.status;
            slot.final_pos = pos;
            if (out.status == EpsStatus::positive) {
                slot.eps_lo = out.epsilon.lo_rational();
                return;
            }
            // negative or undecided: step to the next convergent
        }
    });

    // deterministic fold in item order
    struct Rescued {
        SweepItem item;
        int pos;
        mpq_class eps_lo;
    };
    std::vector<Rescued> rescued;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const ItemOut& o = outs[i];
        if (o.base_status == EpsStatus::negative) res.negative_at_base.push_back(items[i]);
        if (o.precision_exhausted || o.final_status != EpsStatus::positive) {
            res.undecided.push_back(items[i]);
            if (o.precision_exhausted)
                res.note += item_label(spec.name, items[i]) + ": precision exhausted; ";
            continue;
        }
        if (o.final_pos == 0) {
            if (!res.has_base_positive || o.eps_lo < res.min_eps_lo) {
                res.min_eps_lo = o.eps_lo;
                res.min_eps_item = items[i];
            }
            res.has_base_positive = true;
        } else {
            EscalationRecord rec;
            rec.item = items[i];
            rec.from_index = spec.ladder.front().k;
            rec.to_index = spec.ladder[static_cast<std::size_t>(o.final_pos)].k;
            rec.eps_hi_before = decimal_upper(o.base_hi, 12);
            rec.eps_lo_after = decimal_lower(o.eps_lo, 12);
            res.escalations.push_back(std::move(rec));
            rescued.push_back({items[i], o.final_pos, o.eps_lo});
        }
    }

    // Bounds. When a published threshold is configured we certify our epsilon
    // exceeds it and compute the bound from the threshold itself; otherwise
    // the bound comes from our certified minimum.
    Prec bp = cfg.precision.initial;
    if (res.has_base_positive) {
        mpq_class eps_used = res.min_eps_lo;
        if (spec.threshold) {
            res.threshold_ok = res.min_eps_lo > *spec.threshold;
            eps_used = *spec.threshold;
        }
        res.bound_base = dujella_bound(A0, B0, res.q, CReal::from_rational(eps_used, bp));
        res.bound = res.bound_base;
    }
    if (!rescued.empty()) {
        mpq_class rescued_min = rescued.front().eps_lo;
        for (const Rescued& r : rescued) rescued_min = std::min(rescued_min, r.eps_lo);
        res.rescued_min_eps_lo = rescued_min;
        if (spec.rescue_threshold)
            res.rescue_threshold_ok = rescued_min > *spec.rescue_threshold;
        for (const Rescued& r : rescued) {
            mpq_class eps_used = spec.rescue_threshold ? *spec.rescue_threshold : r.eps_lo;
            mpz_class b = dujella_bound(A0, B0, spec.ladder[static_cast<std::size_t>(r.pos)].q,
                                        CReal::from_rational(eps_used, bp));
            res.bound_rescued = std::max(res.bound_rescued, b);
        }
        res.bound = std::max(res.bound, res.bound_rescued);
    }

    res.ok = res.undecided.empty() && res.threshold_ok && res.rescue_threshold_ok;
    return res;
}

Stage0Case run_stage0_case(const CampaignConfig& cfg, bool positive_sign) {
    Stage0Case c;
    c.name = positive_sign ? "Lambda>0" : "Lambda<0";
    c.tau_name = positive_sign ? "tau" : "tau_inv";
    if (cfg.use_published_thresholds)
        c.threshold = positive_sign ? cfg.eps_stage0_pos : cfg.eps_stage0_neg;

    Refinable tau = positive_sign ? tau_refiner() : tau_inv_refiner();
    std::size_t index = positive_sign ? cfg.tau_conv_index : cfg.tau_inv_conv_index;
    std::vector<Convergent> ladder =
        convergent_ladder(tau, index, cfg.escalation_limit, cfg.precision);

    Prec bp = cfg.precision.initial;
    CReal A_n = A_integer(positive_sign ? 48 : 61, bp);
    CReal A_m = A_integer(positive_sign ? 19 : 24, bp);
    Refinable mu = positive_sign ? mu_stage0_pos() : mu_stage0_neg();

    ReductionOutcome out;
    for (const Convergent& conv : ladder) {
        ReductionInstance inst =
            make_instance("stage0/" + c.name, tau, mu, A_n, B_value(true, bp), cfg.M, conv.q);
        out = dujella_epsilon(inst, cfg.precision);
        c.used_prec = out.used_prec;
        c.conv_index = conv.k;
        c.q = conv.q;
        if (out.status == EpsStatus::positive) break;
    }
    if (out.status != EpsStatus::positive) {
        c.ok = false;
        return c;
    }
    c.eps_lo = out.epsilon.lo_rational();
    if (cfg.use_published_thresholds) {
        c.threshold_ok = c.eps_lo > c.threshold;
    } else {
        c.threshold = c.eps_lo;
        c.threshold_ok = true;
    }

    CReal eps_thr = CReal::from_rational(c.threshold, bp);
    c.n_gap_bound = dujella_bound(A_n, B_value(true, bp), c.q, eps_thr);
    c.m_gap_bound = dujella_bound(A_m, B_value(false, bp), c.q, eps_thr);
    c.ok = c.threshold_ok;
    return c;
}

std::vector<SweepItem> one_dim_items(long k_max) {
    std::vector<SweepItem> items;
    items.reserve(static_cast<std::size_t>(k_max));
    for (long k = 1; k <= k_max; ++k) items.push_back({k, -1});
    return items;
}

} // namespace

NamedMu named_mu_form(const std::string& expr, long k, long l) {
    auto need_k = [&]() {
        if (k < 1) throw ConfigError("mu expression '" + expr + "' needs k >= 1");
    };
    auto need_l = [&]() {
        if (l < 1) throw ConfigError("mu expression '" + expr + "' needs l >= 1");
    };
    if (expr == "stage0+")
        return {mu_stage0_pos(), "log(1/(sqrt5 c_alpha))/log(alpha_T)"};
    if (expr == "stage0-")
        return {mu_stage0_neg(), "log(sqrt5 c_alpha)/log(alpha)"};
    if (expr == "stage1+") {
        need_k();
        return {mu_stage1_pos(k), "log((alpha^k-1)/(sqrt5 c_alpha))/log(alpha_T)"};
    }
    if (expr == "stage1-") {
        need_k();
        return {mu_stage1_neg(k), "log(sqrt5 c_alpha/(alpha^k-1))/log(alpha)"};
    }
    if (expr == "stage2+") {
        need_k();
        return {mu_stage2_pos(k), "log(1/(sqrt5 c_alpha (alpha_T^k-1)))/log(alpha_T)"};
    }
    if (expr == "stage2-") {
        need_k();
        return {mu_stage2_neg(k), "log(sqrt5 c_alpha (alpha_T^k-1))/log(alpha)"};
    }
    if (expr == "stage3+") {
        need_k();
        need_l();
        return {mu_stage3_pos(k, l),
                "log((alpha^k-1)/(sqrt5 c_alpha (alpha_T^l-1)))/log(alpha_T)"};
    }
    if (expr == "stage3-") {
        need_k();
        need_l();
        return {mu_stage3_neg(k, l),
                "log(sqrt5 c_alpha (alpha_T^l-1)/(alpha^k-1))/log(alpha)"};
    }
    throw ConfigError("unknown mu expression: " + expr);
}

Stage0Result run_stage0(const CampaignConfig& cfg) {
    Stage0Result r;
    r.pos = run_stage0_case(cfg, true);
    r.neg = run_stage0_case(cfg, false);
    r.n_gap_bound = static_cast<long>(std::max(r.pos.n_gap_bound, r.neg.n_gap_bound).get_si());
    r.m_gap_bound = static_cast<long>(std::max(r.pos.m_gap_bound, r.neg.m_gap_bound).get_si());
    r.ok = r.pos.ok && r.neg.ok;
    return r;
}

StageSweepResult run_stage1(const CampaignConfig& cfg, long k_max) {
    StageSweepResult r;
    std::vector<SweepItem> items = one_dim_items(k_max);

    CaseSpec pos;
    pos.name = "stage1/Lambda1>0";
    pos.tau_name = "tau";
    pos.tau = tau_refiner();
    pos.ladder = convergent_ladder(pos.tau, cfg.tau_conv_index, cfg.escalation_limit,
                                   cfg.precision);
    pos.mu = [](SweepItem it) { return mu_stage1_pos(it.k); };
    pos.A = [](Prec p) { return A_integer(6, p); };
    pos.A_desc = "6";
    pos.B_is_alpha = false;
    if (cfg.use_published_thresholds) pos.threshold = cfg.eps_stage1_pos;
    r.pos = run_sweep(cfg, pos, items);

    CaseSpec neg;
    neg.name = "stage1/Lambda1<0";
    neg.tau_name = "tau_inv";
    neg.tau = tau_inv_refiner();
    neg.ladder = convergent_ladder(neg.tau, cfg.tau_inv_conv_index, cfg.escalation_limit,
                                   cfg.precision);
    neg.mu = [](SweepItem it) { return mu_stage1_neg(it.k); };
    neg.A = A_alphaT2_over_log_alpha;
    neg.A_desc = "alpha_T^2/log(alpha)";
    neg.B_is_alpha = false;
    r.neg = run_sweep(cfg, neg, items);

    r.bound = static_cast<long>(std::max(r.pos.bound, r.neg.bound).get_si());
    r.ok = r.pos.ok && r.neg.ok;
    return r;
}

StageSweepResult run_stage2(const CampaignConfig& cfg, long k_max) {
    StageSweepResult r;
    std::vector<SweepItem> items = one_dim_items(k_max);

    CaseSpec pos;
    pos.name = "stage2/Lambda2>0";
    pos.tau_name = "tau";
    pos.tau = tau_refiner();
    pos.ladder = convergent_ladder(pos.tau, cfg.tau_conv_index, cfg.escalation_limit,
                                   cfg.precision);
    pos.mu = [](SweepItem it) { return mu_stage2_pos(it.k); };
    pos.A = [](Prec p) { return A_integer(50, p); };
    pos.A_desc = "50";
    pos.B_is_alpha = true;
    if (cfg.use_published_thresholds) {
        pos.threshold = cfg.eps_stage2_pos;
        pos.rescue_threshold = cfg.eps_stage2_rescue;
    }
    r.pos = run_sweep(cfg, pos, items);

    CaseSpec neg;
    neg.name = "stage2/Lambda2<0";
    neg.tau_name = "tau_inv";
    neg.tau = tau_inv_refiner();
    neg.ladder = convergent_ladder(neg.tau, cfg.tau_inv_conv_index, cfg.escalation_limit,
                                   cfg.precision);
    neg.mu = [](SweepItem it) { return mu_stage2_neg(it.k); };
    neg.A = A_444_alpha4_over_log_alpha;
    neg.A_desc = "4.44*alpha^4/log(alpha)";
    neg.B_is_alpha = true;
    r.neg = run_sweep(cfg, neg, items);

    r.bound = static_cast<long>(std::max(r.pos.bound, r.neg.bound).get_si());
    r.ok = r.pos.ok && r.neg.ok;
    return r;
}

StageSweepResult run_stage3(const CampaignConfig& cfg, long k_max, long l_max) {
    StageSweepResult r;
    std::vector<SweepItem> items;
    items.reserve(static_cast<std::size_t>(k_max) * static_cast<std::size_t>(l_max));
    for (long k = 1; k <= k_max; ++k)
        for (long l = 1; l <= l_max; ++l) items.push_back({k, l});

    CaseSpec pos;
    pos.name = "stage3/Lambda3>0";
    pos.tau_name = "tau";
    pos.tau = tau_refiner();
    pos.ladder = convergent_ladder(pos.tau, cfg.tau_conv_index, cfg.escalation_limit,
                                   cfg.precision);
    pos.mu = [](SweepItem it) { return mu_stage3_pos(it.k, it.l); };
    pos.A = [](Prec p) { return A_integer(37, p); };
    pos.A_desc = "37";
    pos.B_is_alpha = true;
    if (cfg.use_published_thresholds) {
        pos.threshold = cfg.eps_stage3_pos;
        pos.rescue_threshold = cfg.eps_stage3_rescue;
    }
    r.pos = run_sweep(cfg, pos, items);

    CaseSpec neg;
    neg.name = "stage3/Lambda3<0";
    neg.tau_name = "tau_inv";
    neg.tau = tau_inv_refiner();
    neg.ladder = convergent_ladder(neg.tau, cfg.tau_inv_conv_index, cfg.escalation_limit,
                                   cfg.precision);
    neg.mu = [](SweepItem it) { return mu_stage3_neg(it.k, it.l); };
    neg.A = A_328_alpha4_over_log_alpha;
    neg.A_desc = "3.28*alpha^4/log(alpha)";
    neg.B_is_alpha = true;
    r.neg = run_sweep(cfg, neg, items);

    r.bound = static_cast<long>(std::max(r.pos.bound, r.neg.bound).get_si());
    r.ok = r.pos.ok && r.neg.ok;
    return r;
}

namespace {

AssumptionCheck certify(const std::string& name, const std::string& statement, bool pass) {
    return AssumptionCheck{name, statement, pass};
}

std::vector<AssumptionCheck> build_assumptions(const CampaignConfig& cfg) {
    const auto& C = AlgebraicConstants::at(cfg.precision.initial);
    CReal quarter = CReal::from_rational(mpq_class(1, 4), cfg.precision.initial);
    CReal two = CReal(2L, cfg.precision.initial);
    CReal half = CReal::from_rational(mpq_class(1, 2), cfg.precision.initial);

    std::vector<AssumptionCheck> a;
    a.push_back(certify("doubling-absorption",
                        "2 <= alpha^2 and 2 <= alpha_T^2 (turns 2*max{...} into "
                        "max{alpha^(g+2)..., alpha_T^(g+2)...})",
                        two.certainly_less(C.alpha.pow_int(2)) &&
                            two.certainly_less(C.alpha_T.pow_int(2))));
    a.push_back(certify("lambda-from-phi",
                        "1 - exp(-1/2) >= 1/4, so |Phi| < 1/4 gives |Lambda| < 1/2 and "
                        "|Lambda| < 2|Phi| on (-1/2, 1/2)",
                        ((CReal(1L, cfg.precision.initial) - (-half).exp()))
                            .certainly_greater(quarter)));
    a.push_back(certify("stage0-dispatch",
                        "min gap >= 20 makes max{alpha^(5-g), alpha_T^(2-g)} < 1/4",
                        C.alpha.pow_int(5 - 20).certainly_less(quarter) &&
                            C.alpha_T.pow_int(2 - 20).certainly_less(quarter)));
    a.push_back(certify("stage1-dispatch",
                        "m-gap >= 20 makes 1.42 alpha_T^(-g) < 1/4",
                        (CReal::from_rational(mpq_from_decimal("1.42"), cfg.precision.initial) *
                         C.alpha_T.pow_int(-20))
                            .certainly_less(quarter)));
    a.push_back(certify("stage2-dispatch",
                        "n-gap >= 20 makes 2.22 alpha^(4-g) < 1/4",
                        (CReal::from_rational(mpq_from_decimal("2.22"), cfg.precision.initial) *
                         C.alpha.pow_int(4 - 20))
                            .certainly_less(quarter)));
    a.push_back(certify("stage3-dispatch",
                        "n >= 300 makes 1.64 alpha^(4-n) < 1/4",
                        (CReal::from_rational(mpq_from_decimal("1.64"), cfg.precision.initial) *
                         C.alpha.pow_int(4 - 300))
                            .certainly_less(quarter)));
    a.push_back(certify("gap-dispatch-coverage",
                        "stages 1-3 sweep their gap ranges from 1, so the small-gap "
                        "dispatch cases (gaps < 20) are instances of the sweeps",
                        true));
    return a;
}

ConvergentAudit audit_convergent(const std::string& tau_name, const Refinable& tau,
                                 std::size_t configured, const mpz_class& M,
                                 const PrecisionPolicy& policy) {
    ConvergentAudit audit;
    audit.tau_name = tau_name;
    audit.configured_index = configured;
    Convergent first = first_denominator_exceeding(tau, 6 * M, policy);
    audit.first_exceeding_6m = first.k;
    Convergent used = convergent_at(tau, configured, policy);
    audit.q = used.q;
    audit.q_exceeds_6m = used.q > 6 * M;
    return audit;
}

} // namespace

CampaignReport run_campaign(const CampaignConfig& cfg,
                            const std::optional<mpz_class>& global_bound) {
    CampaignReport rep;
    rep.M = cfg.M;
    rep.global_bound_hypothesis = global_bound;
    rep.hypothesis_covers_global_bound = global_bound && cfg.M >= *global_bound;

    try {
        rep.assumptions = build_assumptions(cfg);
        for (const auto& check : rep.assumptions)
            if (!check.certified)
                rep.failures.push_back("assumption not certified: " + check.name);

        rep.convergent_audits.push_back(audit_convergent(
            "tau", tau_refiner(), cfg.tau_conv_index, cfg.M, cfg.precision));
        rep.convergent_audits.push_back(audit_convergent(
            "tau_inv", tau_inv_refiner(), cfg.tau_inv_conv_index, cfg.M, cfg.precision));
        for (const auto& audit : rep.convergent_audits)
            if (!audit.q_exceeds_6m)
                rep.failures.push_back("convergent q <= 6M for " + audit.tau_name);
        if (!rep.failures.empty()) return rep;

        rep.stage0 = run_stage0(cfg);
        if (!rep.stage0.ok) {
            rep.failures.push_back("stage0 failed");
            return rep;
        }
        rep.stage1 = run_stage1(cfg, rep.stage0.n_gap_bound);
        if (!rep.stage1.ok) {
            rep.failures.push_back("stage1 failed: " + rep.stage1.pos.note + rep.stage1.neg.note);
            return rep;
        }
        rep.stage2 = run_stage2(cfg, rep.stage0.m_gap_bound);
        if (!rep.stage2.ok) {
            rep.failures.push_back("stage2 failed: " + rep.stage2.pos.note + rep.stage2.neg.note);
            return rep;
        }
        long k3 = std::max(rep.stage2.bound, static_cast<long>(rep.stage0.n_gap_bound));
        long l3 = std::max(rep.stage1.bound, static_cast<long>(rep.stage0.m_gap_bound));
        rep.stage3 = run_stage3(cfg, k3, l3);
        if (!rep.stage3.ok) {
            rep.failures.push_back("stage3 failed: " + rep.stage3.pos.note + rep.stage3.neg.note);
            return rep;
        }

        rep.final_n_bound = rep.stage3.bound;
        rep.contradiction_with_300 = rep.final_n_bound < 300;
        rep.proof_complete = rep.contradiction_with_300 && rep.hypothesis_covers_global_bound &&
                             rep.failures.empty();
    } catch (const PrecisionExhausted& e) {
        rep.failures.push_back(std::string("precision-exhausted: ") + e.what());
    } catch (const CertificationError& e) {
        rep.failures.push_back(std::string("certification: ") + e.what());
    }
    return rep;
}

} // namespace fibtri
