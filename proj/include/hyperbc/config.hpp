#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperbc/feedback.hpp"
#include "hyperbc/types.hpp"

namespace hyperbc {

struct TargetSpec {
    std::vector<double> kappa;
    double mu = 0.0;               // resolved value; rate form is converted at load time
    std::optional<double> rate;    // kept for reporting
};

struct RunConfig {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    TargetSpec controller_target;
    std::optional<TargetSpec> observer_target;

    int n = 0;
    BasisChoice basis = BasisChoice::Intermediate;
    double epsilon = 0.0;

    Window window;

    int cells = 0;
    double horizon = 0.0;
    std::string x0_preset;

    int quadrature_nodes = 0;
    int samples_per_disk = 0;
    int grid_samples = 0;
};

// Parses and validates a JSON config file. Shape errors, out-of-range values
// (|mu| outside (0,1), epsilon outside (0,1], nonpositive sizes) and unknown
// keys all raise ConfigError.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

StateFunction initial_state(const RunConfig& cfg);

}  // namespace hyperbc
