#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hyperbc/pipeline.hpp"

namespace hyperbc {

// Shortest round-trip decimal form (printf %.17g semantics with fixed-width
// exponent), used everywhere a double is serialized so identical configs give
// byte-identical files.
std::string format_g17(double x);

std::string spectra_csv_text(const std::vector<Spectrum>& spectra);
void write_text_file(const std::string& path, const std::string& text);

std::string trace_csv_text(const SimulationTrace& trace);
std::string observer_trace_csv_text(const ObserverSimulation& sim);

nlohmann::json spectrum_report(const std::vector<Spectrum>& spectra, const RunConfig& cfg);
nlohmann::json design_report(const DesignResult& r, const RunConfig& cfg);
nlohmann::json converge_report(const ConvergeResult& r, const RunConfig& cfg, int n_min,
                               int n_max, std::optional<double> margin);
nlohmann::json simulate_report(const SimulateResult& r, const RunConfig& cfg);
nlohmann::json observe_report(const ObserveResult& r, const RunConfig& cfg);

void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace hyperbc
