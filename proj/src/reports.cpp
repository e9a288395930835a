#include "hyperbc/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace hyperbc {

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string spectra_csv_text(const std::vector<Spectrum>& spectra) {
    std::string out = "set,index,re,im\n";
    for (const auto& s : spectra) {
        const std::string label = to_string(s.label);
        for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
            out += label;
            out += ',';
            out += std::to_string(i);
            out += ',';
            out += format_g17(s.eigenvalues[i].real());
            out += ',';
            out += format_g17(s.eigenvalues[i].imag());
            out += '\n';
        }
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw NumericalError("cannot write '" + path + "'");
    out << text;
    if (!out) throw NumericalError("write failed for '" + path + "'");
}

std::string trace_csv_text(const SimulationTrace& trace) {
    std::string out = "t,energy,u_re,u_im\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        out += format_g17(trace.times[i]);
        out += ',';
        out += format_g17(trace.energy[i]);
        out += ',';
        out += format_g17(trace.control[i].real());
        out += ',';
        out += format_g17(trace.control[i].imag());
        out += '\n';
    }
    return out;
}

std::string observer_trace_csv_text(const ObserverSimulation& sim) {
    std::string out = "t,error_energy,plant_energy\n";
    for (std::size_t i = 0; i < sim.error.times.size(); ++i) {
        out += format_g17(sim.error.times[i]);
        out += ',';
        out += format_g17(sim.error.energy[i]);
        out += ',';
        out += format_g17(sim.plant.energy[i]);
        out += '\n';
    }
    return out;
}

namespace {

using njson = nlohmann::json;

njson cnum(cplx z) { return njson{{"re", z.real()}, {"im", z.imag()}}; }

njson cvec(const std::vector<cplx>& v) {
    njson arr = njson::array();
    for (cplx z : v) arr.push_back(cnum(z));
    return arr;
}

njson provenance(const RunConfig& cfg) {
    return njson{{"window", {{"re_min", cfg.window.re_min}, {"im_max", cfg.window.im_max}}},
                 {"quadrature_nodes", cfg.quadrature_nodes},
                 {"sampling", {{"per_disk", cfg.samples_per_disk}, {"grid", cfg.grid_samples}}},
                 {"n", cfg.n},
                 {"basis", to_string(cfg.basis)},
                 {"epsilon", cfg.epsilon}};
}

njson assumption_block(const AssumptionReport& a) {
    return njson{{"riesz_ok", a.riesz_ok},
                 {"discrete_ok", a.discrete_ok},
                 {"simple_ok", a.simple_ok},
                 {"a2_ok", a.a2_ok()},
                 {"a2_bound_M", a.a2_bound_M},
                 {"a2_samples_max", a.a2_samples_max},
                 {"min_gap", a.min_gap},
                 {"details", a.details}};
}

njson convergence_block(const ConvergenceReport& c) {
    return njson{{"n", c.n},
                 {"contained", c.contained},
                 {"one_per_disk", c.one_per_disk},
                 {"unmatched_count", static_cast<int>(c.unmatched.size())},
                 {"max_re", c.max_re_closed_loop},
                 {"hausdorff", c.hausdorff}};
}

}  // namespace

njson spectrum_report(const std::vector<Spectrum>& spectra, const RunConfig& cfg) {
    njson sets = njson::array();
    for (const auto& s : spectra) {
        njson eigs = njson::array();
        for (cplx z : s.eigenvalues) eigs.push_back(cnum(z));
        sets.push_back(njson{{"set", to_string(s.label)},
                             {"count", static_cast<int>(s.eigenvalues.size())},
                             {"eigenvalues", eigs}});
    }
    return njson{{"spectra", sets}, {"provenance", provenance(cfg)}};
}

njson design_report(const DesignResult& r, const RunConfig& cfg) {
    njson controller{{"rho", cnum(r.ctx.intermediate_bd.rho)},
                     {"c_plus", cnum(r.ctx.kernel.c_plus)},
                     {"c_minus", cnum(r.ctx.kernel.c_minus)},
                     {"gains", cvec(r.at_n.feedback.gains)},
                     {"assumptions", assumption_block(r.assumptions)},
                     {"convergence", convergence_block(r.at_n.convergence)}};
    njson doc{{"controller", controller}, {"provenance", provenance(cfg)}};
    if (r.observer_at_n) {
        doc["observer"] = njson{{"rho_o", cnum(r.observer_at_n->observer.rho_o)},
                                {"r", cvec(r.observer_at_n->observer.r)},
                                {"l", cvec(r.observer_at_n->observer.l)},
                                {"assumptions", assumption_block(*r.observer_assumptions)},
                                {"convergence", convergence_block(r.observer_at_n->convergence)}};
    }
    return doc;
}

njson converge_report(const ConvergeResult& r, const RunConfig& cfg, int n_min, int n_max,
                      std::optional<double> margin) {
    njson rows = njson::array();
    for (const auto& row : r.rows) rows.push_back(convergence_block(row));
    njson criterion{{"kind", margin ? "StabilityMargin" : "TheoremDisks"},
                    {"margin", margin ? njson(*margin) : njson(nullptr)}};
    njson minimal{{"n_eps", r.minimal.n_eps ? njson(*r.minimal.n_eps) : njson(nullptr)},
                  {"first_pass",
                   r.minimal.first_pass ? njson(*r.minimal.first_pass) : njson(nullptr)}};
    return njson{{"criterion", criterion},
                 {"range", {{"n_min", n_min}, {"n_max", n_max}}},
                 {"rows", rows},
                 {"minimal_order", minimal},
                 {"provenance", provenance(cfg)}};
}

namespace {

njson rate_summary(double fitted, double predicted) {
    njson gap = nullptr;
    if (std::isfinite(fitted) && std::isfinite(predicted) && predicted != 0.0)
        gap = std::abs(fitted - predicted) / std::abs(predicted);
    return njson{{"fitted_rate", std::isfinite(fitted) ? njson(fitted) : njson(nullptr)},
                 {"spectral_rate", std::isfinite(predicted) ? njson(predicted) : njson(nullptr)},
                 {"relative_gap", gap}};
}

}  // namespace

njson simulate_report(const SimulateResult& r, const RunConfig& cfg) {
    njson doc = rate_summary(r.fitted_rate, r.predicted_rate);
    doc["provenance"] = provenance(cfg);
    return doc;
}

njson observe_report(const ObserveResult& r, const RunConfig& cfg) {
    njson doc = rate_summary(r.fitted_error_rate, r.predicted_rate);
    doc["fitted_error_rate"] = doc["fitted_rate"];
    doc.erase("fitted_rate");
    doc["provenance"] = provenance(cfg);
    return doc;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace hyperbc
