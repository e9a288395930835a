#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hyperbc/pipeline.hpp"
#include "hyperbc/reports.hpp"
#include "hyperbc/schema_check.hpp"
#include "hyperbc/schemas.hpp"

namespace fs = std::filesystem;

namespace {

using namespace hyperbc;

RunConfig load_checked(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    auto bad = schema_violations(schema_json("config"), doc);
    if (!bad.empty()) throw ConfigError("config rejected by schema: " + bad.front());
    return parse_config(text);
}

fs::path prepare_out(const std::string& dir) {
    fs::path p(dir);
    fs::create_directories(p);
    return p;
}

void emit_json(const fs::path& path, const char* schema_name, const nlohmann::json& doc) {
    auto bad = schema_violations(schema_json(schema_name), doc);
    if (!bad.empty())
        throw ContractViolation("emitted report violates its schema: " + bad.front());
    write_json_file(path.string(), doc);
}

// Position of each dynamics label in the run_spectrum result list.
std::size_t role_index(SpectrumLabel label) {
    switch (label) {
        case SpectrumLabel::OpenLoop: return 0;
        case SpectrumLabel::Intermediate: return 1;
        case SpectrumLabel::Desired: return 2;
        case SpectrumLabel::ClosedLoop: return 3;
        case SpectrumLabel::ObserverIntermediate: return 4;
        case SpectrumLabel::ObserverDesired: return 5;
        case SpectrumLabel::ObserverClosedLoop: return 6;
    }
    throw ConfigError("unknown dynamics label");
}

int cmd_spectrum(const std::string& config_path, const std::string& out_dir,
                 const std::optional<std::string>& which) {
    RunConfig cfg = load_checked(config_path);
    fs::path out = prepare_out(out_dir);
    std::optional<std::size_t> idx;
    if (which) {
        idx = role_index(spectrum_label_from_string(*which));
        if (*idx > 3 && !cfg.observer_target)
            throw ConfigError("observer spectra need an observer_target in the config");
    }
    std::vector<Spectrum> spectra = run_spectrum(cfg);
    if (idx) spectra = {spectra[*idx]};
    write_text_file((out / "spectrum.csv").string(), spectra_csv_text(spectra));
    emit_json(out / "spectrum.json", "spectrum_report", spectrum_report(spectra, cfg));
    return 0;
}

int cmd_design(const std::string& config_path, const std::string& out_dir) {
    RunConfig cfg = load_checked(config_path);
    fs::path out = prepare_out(out_dir);
    DesignResult r = run_design(cfg);
    emit_json(out / "design.json", "design_report", design_report(r, cfg));
    if (!r.all_assumptions_ok()) {
        std::cerr << "assumption failure: see " << (out / "design.json").string() << "\n";
        return 3;
    }
    return 0;
}

std::string converge_csv_text(const ConvergeResult& r) {
    std::string out = "n,contained,one_per_disk,unmatched_count,max_re,hausdorff\n";
    for (const auto& row : r.rows) {
        out += std::to_string(row.n);
        out += row.contained ? ",1," : ",0,";
        out += row.one_per_disk ? "1," : "0,";
        out += std::to_string(row.unmatched.size());
        out += ',';
        out += format_g17(row.max_re_closed_loop);
        out += ',';
        out += format_g17(row.hausdorff);
        out += '\n';
    }
    return out;
}

int cmd_converge(const std::string& config_path, const std::string& out_dir, int n_min, int n_max,
                 const std::optional<double>& margin) {
    RunConfig cfg = load_checked(config_path);
    fs::path out = prepare_out(out_dir);
    if (n_max <= 0) n_max = cfg.n;
    ConvergeResult r = run_converge(cfg, n_min, n_max, margin);
    write_text_file((out / "converge.csv").string(), converge_csv_text(r));
    emit_json(out / "converge.json", "converge_report",
              converge_report(r, cfg, n_min, n_max, margin));
    if (!r.minimal.n_eps) {
        std::cerr << "convergence criterion unmet on " << n_min << ".." << n_max << "\n";
        return 4;
    }
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    RunConfig cfg = load_checked(config_path);
    fs::path out = prepare_out(out_dir);
    SimulateResult r = run_simulate(cfg);
    write_text_file((out / "trace.csv").string(), trace_csv_text(r.trace));
    emit_json(out / "simulate.json", "simulate_report", simulate_report(r, cfg));
    return 0;
}

int cmd_observe(const std::string& config_path, const std::string& out_dir) {
    RunConfig cfg = load_checked(config_path);
    fs::path out = prepare_out(out_dir);
    ObserveResult r = run_observe(cfg);
    write_text_file((out / "observer_trace.csv").string(), observer_trace_csv_text(r.sim));
    emit_json(out / "observe.json", "observe_report", observe_report(r, cfg));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary feedback and observer synthesis for a 1-D hyperbolic plant"};
    app.require_subcommand(1);

    struct Common {
        std::string config;
        std::string out = ".";
    };
    auto add_common = [](CLI::App* sub, Common& c) {
        sub->add_option("--config", c.config, "JSON config path")->required();
        sub->add_option("--out", c.out, "output directory");
    };

    Common sp_c, de_c, co_c, si_c, ob_c;
    std::string which;

    CLI::App* sp = app.add_subcommand("spectrum", "eigenvalue sets as CSV/JSON");
    add_common(sp, sp_c);
    CLI::Option* which_opt = sp->add_option(
        "--which", which,
        "single dynamics label (OpenLoop, Intermediate, Desired, ClosedLoop, "
        "ObserverIntermediate, ObserverDesired, ObserverClosedLoop)");

    CLI::App* de = app.add_subcommand("design", "gains and assumption report");
    add_common(de, de_c);

    CLI::App* co = app.add_subcommand("converge", "order sweep against the disk criterion");
    add_common(co, co_c);
    int n_min = 1, n_max = 0;
    double margin_value = 0.0;
    co->add_option("--n-min", n_min, "smallest order");
    co->add_option("--n-max", n_max, "largest order (default: the configured n)");
    CLI::Option* margin_opt =
        co->add_option("--margin", margin_value, "use the stability-margin criterion max Re <= margin");

    CLI::App* si = app.add_subcommand("simulate", "closed-loop trace and decay-rate summary");
    add_common(si, si_c);

    CLI::App* ob = app.add_subcommand("observe", "observer-error trace and decay-rate summary");
    add_common(ob, ob_c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) {
            std::optional<std::string> w;
            if (which_opt->count() > 0) w = which;
            return cmd_spectrum(sp_c.config, sp_c.out, w);
        }
        if (de->parsed()) return cmd_design(de_c.config, de_c.out);
        if (co->parsed()) {
            std::optional<double> margin;
            if (margin_opt->count() > 0) margin = margin_value;
            return cmd_converge(co_c.config, co_c.out, n_min, n_max, margin);
        }
        if (si->parsed()) return cmd_simulate(si_c.config, si_c.out);
        if (ob->parsed()) return cmd_observe(ob_c.config, ob_c.out);
    } catch (const hyperbc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const hyperbc::AssumptionError& e) {
        std::cerr << "assumption failure: " << e.what() << "\n";
        return 3;
    } catch (const hyperbc::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
