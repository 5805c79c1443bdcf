#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibtri/bounds.hpp"
#include "fibtri/campaign.hpp"
#include "fibtri/constants.hpp"
#include "fibtri/contfrac.hpp"
#include "fibtri/numutil.hpp"
#include "fibtri/report.hpp"
#include "fibtri/search.hpp"
#include "fibtri/sequences.hpp"

namespace py = pybind11;
using namespace fibtri;

namespace {

py::object py_int(const mpz_class& z) {
    static py::object ctor = py::module_::import("builtins").attr("int");
    return ctor(z.get_str());
}

py::object json_loads(const ordered_json& j) {
    static py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

Refinable target_refiner(const std::string& name) {
    if (name == "tau") return tau_refiner();
    if (name == "tau-inv" || name == "tau_inv") return tau_inv_refiner();
    throw ConfigError("unknown target: " + name + " (expected 'tau' or 'tau-inv')");
}

py::dict convergent_dict(const Convergent& c) {
    py::dict d;
    d["k"] = c.k;
    d["a"] = py_int(c.a);
    d["p"] = py_int(c.p);
    d["q"] = py_int(c.q);
    return d;
}

} // namespace

PYBIND11_MODULE(_fibtri, m) {
    m.doc() = "Certified verification of the integers with two representations as a "
              "Fibonacci number minus a Tribonacci number";

    py::register_exception<CertificationError>(m, "CertificationError");

    m.def("fibonacci", [](std::size_t k) { return py_int(fibonacci(k)); }, py::arg("k"),
          "Exact k-th Fibonacci number (k <= 1000).");
    m.def("lucas", [](std::size_t k) { return py_int(lucas(k)); }, py::arg("k"),
          "Exact k-th Lucas number (k <= 1000).");
    m.def("tribonacci", [](std::size_t k) { return py_int(tribonacci(k)); }, py::arg("k"),
          "Exact k-th Tribonacci number (k <= 1000).");

    m.def(
        "search",
        [](std::size_t n_max, std::size_t m_max, int workers) {
            py::list out;
            for (const auto& rec : search(n_max, m_max, workers)) {
                py::dict d;
                d["c"] = py_int(rec.c);
                py::list reps;
                for (const auto& rep : rec.reps) {
                    py::dict r;
                    r["n"] = rep.n;
                    r["m"] = rep.m;
                    r["F"] = py_int(rep.f_value);
                    r["T"] = py_int(rep.t_value);
                    reps.append(r);
                }
                d["reps"] = reps;
                out.append(d);
            }
            return out;
        },
        py::arg("n_max") = 300, py::arg("m_max") = 240, py::arg("workers") = 1,
        "Integers with at least two representations F_n - T_m for 2 <= n < n_max, "
        "2 <= m < m_max.");

    m.def(
        "cf_quotients",
        [](const std::string& target, std::size_t count) {
            py::list out;
            for (const auto& a : cf_expand(target_refiner(target), count))
                out.append(py_int(a));
            return out;
        },
        py::arg("target") = "tau", py::arg("count") = 12,
        "Certified partial quotients of tau = log(alpha)/log(alpha_T) or its inverse.");

    m.def(
        "convergent",
        [](const std::string& target, std::size_t k) {
            return convergent_dict(convergent_at(target_refiner(target), k));
        },
        py::arg("target"), py::arg("k"), "Exact convergent p_k/q_k.");

    m.def(
        "constants",
        [](long prec) { return json_loads(constants_json(AlgebraicConstants::at(prec))); },
        py::arg("prec") = 1024,
        "Certified enclosures of the algebraic constants as decimal strings.");

    m.def(
        "reduce_instance",
        [](const std::string& tau, const std::string& mu_expr, long k, long l,
           const std::string& A, const std::string& B, const std::string& M,
           std::size_t convergent_index) {
            Prec p = 1024;
            Refinable t = target_refiner(tau);
            NamedMu mu = named_mu_form(mu_expr, k, l);
            Convergent conv = convergent_at(t, convergent_index);
            const auto& C = AlgebraicConstants::at(p);
            CReal Bv = (B == "alpha") ? C.alpha
                       : (B == "alphaT" || B == "alpha_T")
                           ? C.alpha_T
                           : throw ConfigError("unknown B: " + B);
            ReductionInstance inst =
                make_instance("py", t, mu.mu, CReal::from_rational(mpq_from_decimal(A), p), Bv,
                              mpz_from_scientific(M), conv.q);
            ReductionOutcome out = dujella_epsilon(inst);
            py::dict d;
            d["mu"] = mu.desc;
            d["q"] = py_int(conv.q);
            d["status"] = to_string(out.status);
            d["eps_lo"] = out.epsilon.decimal_lo(20);
            d["eps_hi"] = out.epsilon.decimal_hi(20);
            if (out.k_bound) d["k_bound"] = py_int(*out.k_bound);
            return d;
        },
        py::arg("tau") = "tau", py::arg("mu_expr") = "stage0+", py::arg("k") = -1,
        py::arg("l") = -1, py::arg("A") = "48", py::arg("B") = "alpha",
        py::arg("M") = "8e51", py::arg("convergent_index") = 104,
        "One reduction-lemma instance: certified epsilon and the bound it buys.");

    m.def(
        "bounds_chain",
        [](long prec) {
            return json_loads(bounds_json(run_bounds_chain(AlgebraicConstants::at(prec))));
        },
        py::arg("prec") = 1024, "The certified coefficient chain.");

    m.def(
        "run_campaign",
        [](const std::string& M, int workers) {
            CampaignConfig cfg = CampaignConfig::defaults();
            cfg.M = mpz_from_scientific(M);
            cfg.workers = workers;
            const auto& C = AlgebraicConstants::at(cfg.precision.initial);
            BoundsReport b = run_bounds_chain(C);
            std::optional<mpz_class> certified_bound;
            if (b.ok) certified_bound = b.global_result.bound;
            return json_loads(campaign_json(run_campaign(cfg, certified_bound)));
        },
        py::arg("M") = "8e51", py::arg("workers") = 1, "The four-stage reduction campaign.");

    m.def(
        "verify",
        [](const std::string& golden_table, int workers) {
            RunConfig cfg = RunConfig::defaults();
            if (!golden_table.empty()) cfg.golden_table_path = golden_table;
            cfg.workers = workers;
            return json_loads(report_json(fibtri::verify(cfg)));
        },
        py::arg("golden_table") = "", py::arg("workers") = 1,
        "The complete pipeline; returns the full report as a dict.");

    m.attr("__version__") = version_string();
}
