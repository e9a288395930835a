#include "hyperbc/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace hyperbc {

namespace {

using njson = nlohmann::json;

void reject_unknown(const njson& obj, const char* where,
                    std::initializer_list<const char*> keys) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known)
            throw ConfigError(std::string("unknown key '") + key + "' in " + where);
    }
}

double number_at(const njson& obj, const char* where, const char* key) {
    if (!obj.contains(key))
        throw ConfigError(std::string(where) + " is missing '" + key + "'");
    const njson& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError(std::string(where) + "." + key + " must be a number");
    return v.get<double>();
}

double number_or(const njson& obj, const char* where, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const njson& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError(std::string(where) + "." + key + " must be a number");
    return v.get<double>();
}

int integer_or(const njson& obj, const char* where, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const njson& v = obj.at(key);
    if (!v.is_number_integer())
        throw ConfigError(std::string(where) + "." + key + " must be an integer");
    return v.get<int>();
}

TargetSpec parse_target(const njson& obj, const char* where, double tau) {
    if (!obj.is_object()) throw ConfigError(std::string(where) + " must be an object");
    reject_unknown(obj, where, {"kappa", "mu"});
    TargetSpec t;
    if (!obj.contains("kappa") || !obj.at("kappa").is_array() || obj.at("kappa").empty())
        throw ConfigError(std::string(where) + ".kappa must be a non-empty array");
    for (const auto& v : obj.at("kappa")) {
        if (!v.is_number())
            throw ConfigError(std::string(where) + ".kappa entries must be numbers");
        t.kappa.push_back(v.get<double>());
    }
    if (t.kappa.size() != 2)
        throw ConfigError(std::string(where) +
                          ".kappa must have exactly two entries (first-order flat dynamics)");
    if (!obj.contains("mu")) throw ConfigError(std::string(where) + " is missing 'mu'");
    const njson& mu = obj.at("mu");
    if (mu.is_number()) {
        t.mu = mu.get<double>();
    } else if (mu.is_object()) {
        reject_unknown(mu, (std::string(where) + ".mu").c_str(), {"rate"});
        if (!mu.contains("rate") || !mu.at("rate").is_number())
            throw ConfigError(std::string(where) + ".mu.rate must be a number");
        t.rate = mu.at("rate").get<double>();
        t.mu = std::exp(*t.rate * tau);
    } else {
        throw ConfigError(std::string(where) + ".mu must be a number or {rate}");
    }
    if (!(std::abs(t.mu) > 0.0) || !(std::abs(t.mu) < 1.0))
        throw ConfigError(std::string(where) + ".mu must satisfy 0 < |mu| < 1");
    return t;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    njson doc;
    try {
        doc = njson::parse(json_text);
    } catch (const njson::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(doc, "config",
                   {"plant", "controller_target", "observer_target", "approximation", "epsilon",
                    "window", "simulation", "quadrature", "sampling"});

    RunConfig cfg;

    if (!doc.contains("plant") || !doc.at("plant").is_object())
        throw ConfigError("config needs a 'plant' object");
    const njson& plant = doc.at("plant");
    reject_unknown(plant, "plant", {"alpha", "beta", "gamma"});
    cfg.alpha = number_at(plant, "plant", "alpha");
    cfg.beta = number_at(plant, "plant", "beta");
    cfg.gamma = number_at(plant, "plant", "gamma");
    if (!(cfg.alpha > 0.0) || !(cfg.beta > 0.0))
        throw ConfigError("plant.alpha and plant.beta must be positive");
    if (cfg.gamma == 0.0) throw ConfigError("plant.gamma must be nonzero");
    double tau = 1.0 / std::sqrt(cfg.alpha * cfg.beta);

    if (!doc.contains("controller_target"))
        throw ConfigError("config needs a 'controller_target' object");
    cfg.controller_target = parse_target(doc.at("controller_target"), "controller_target", tau);
    if (doc.contains("observer_target"))
        cfg.observer_target = parse_target(doc.at("observer_target"), "observer_target", tau);

    njson approx = doc.value("approximation", njson::object());
    if (!approx.is_object()) throw ConfigError("approximation must be an object");
    reject_unknown(approx, "approximation", {"n", "basis"});
    cfg.n = integer_or(approx, "approximation", "n", 10);
    if (cfg.n < 0) throw ConfigError("approximation.n must be nonnegative");
    if (approx.contains("basis")) {
        if (!approx.at("basis").is_string())
            throw ConfigError("approximation.basis must be a string");
        cfg.basis = basis_from_string(approx.at("basis").get<std::string>());
    }

    if (doc.contains("epsilon")) {
        if (!doc.at("epsilon").is_number()) throw ConfigError("epsilon must be a number");
        cfg.epsilon = doc.at("epsilon").get<double>();
    } else {
        cfg.epsilon = 0.9;
    }
    if (!(cfg.epsilon > 0.0) || cfg.epsilon > 1.0)
        throw ConfigError("epsilon must lie in (0, 1]");

    njson window = doc.value("window", njson::object());
    if (!window.is_object()) throw ConfigError("window must be an object");
    reject_unknown(window, "window", {"re_min", "im_max"});
    cfg.window.re_min = number_or(window, "window", "re_min", -30.0);
    cfg.window.im_max = number_or(window, "window", "im_max", 200.0);
    if (!(cfg.window.im_max > 0.0)) throw ConfigError("window.im_max must be positive");
    if (!(cfg.window.re_min < 0.0)) throw ConfigError("window.re_min must be negative");

    njson sim = doc.value("simulation", njson::object());
    if (!sim.is_object()) throw ConfigError("simulation must be an object");
    reject_unknown(sim, "simulation", {"cells", "T", "x0"});
    cfg.cells = integer_or(sim, "simulation", "cells", 400);
    if (cfg.cells < 2) throw ConfigError("simulation.cells must be at least 2");
    cfg.horizon = number_or(sim, "simulation", "T", 1.0);
    if (cfg.horizon < 0.0) throw ConfigError("simulation.T must be nonnegative");
    cfg.x0_preset = sim.value("x0", std::string("default"));
    if (cfg.x0_preset != "default" && cfg.x0_preset != "zero")
        throw ConfigError("simulation.x0 must be 'default' or 'zero'");

    njson quad = doc.value("quadrature", njson::object());
    if (!quad.is_object()) throw ConfigError("quadrature must be an object");
    reject_unknown(quad, "quadrature", {"nodes"});
    cfg.quadrature_nodes = integer_or(quad, "quadrature", "nodes", 64);
    if (cfg.quadrature_nodes < 4) throw ConfigError("quadrature.nodes must be at least 4");

    njson sampling = doc.value("sampling", njson::object());
    if (!sampling.is_object()) throw ConfigError("sampling must be an object");
    reject_unknown(sampling, "sampling", {"per_disk", "grid"});
    cfg.samples_per_disk = integer_or(sampling, "sampling", "per_disk", 64);
    cfg.grid_samples = integer_or(sampling, "sampling", "grid", 40);
    if (cfg.samples_per_disk < 8) throw ConfigError("sampling.per_disk must be at least 8");
    if (cfg.grid_samples < 2) throw ConfigError("sampling.grid must be at least 2");

    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

StateFunction initial_state(const RunConfig& cfg) {
    if (cfg.x0_preset == "zero")
        return StateFunction::analytic(ExpSum{}, ExpSum{}, cplx{0.0, 0.0});
    // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i)
    ExpSum w1;
    const cplx half_over_i{0.0, -0.5};
    w1.add_term(half_over_i, cplx{0.0, std::numbers::pi});
    w1.add_term(-half_over_i, cplx{0.0, -std::numbers::pi});
    return StateFunction::analytic(std::move(w1), ExpSum{}, cplx{0.0, 0.0});
}

}  // namespace hyperbc
