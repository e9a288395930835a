#pragma once

#include <optional>

#include "hyperbc/config.hpp"
#include "hyperbc/convergence.hpp"
#include "hyperbc/eigenbasis.hpp"
#include "hyperbc/feedback.hpp"
#include "hyperbc/observer.hpp"
#include "hyperbc/simulation.hpp"
#include "hyperbc/target.hpp"

namespace hyperbc {

// Shared state for one controller-side synthesis: bases are built once, wide
// enough for the largest truncation requested, then reused across n.
struct SynthesisContext {
    PlantParameters plant;
    TargetDynamics target;
    BoundaryDynamics open_bd;
    BoundaryDynamics intermediate_bd;
    BoundedKernel kernel;
    QuadratureRule quad;
    Window window;

    std::vector<EigenPair> open_basis;
    std::vector<EigenPair> intermediate_basis;
    std::vector<EigenPair> desired_basis;

    Spectrum open_loop;
    Spectrum intermediate;
    Spectrum desired;

    std::vector<double> desired_gaps;
    double lattice_gap = 0.0;

    const std::vector<EigenPair>& basis_for(BasisChoice choice) const;
};

SynthesisContext make_context(const RunConfig& cfg, int n_max, SpectrumLabel intermediate_label,
                              SpectrumLabel desired_label);

// Controller context uses controller_target; observer context mirrors it with
// observer_target and the dual boundary condition.
SynthesisContext make_controller_context(const RunConfig& cfg, int n_max);
SynthesisContext make_observer_context(const RunConfig& cfg, int n_max);

struct DesignAtOrder {
    FeedbackApproximation feedback;
    ReducedModel reduced;
    Spectrum closed_loop;
    ConvergenceReport convergence;
};

DesignAtOrder design_at_order(const SynthesisContext& ctx, const RunConfig& cfg, int n);

struct ObserverAtOrder {
    ObserverApproximation observer;
    Spectrum closed_loop;
    ConvergenceReport convergence;
};

ObserverAtOrder observer_at_order(const SynthesisContext& ctx, const RunConfig& cfg, int n);

struct DesignResult {
    SynthesisContext ctx;
    DesignAtOrder at_n;
    AssumptionReport assumptions;
    std::optional<SynthesisContext> observer_ctx;
    std::optional<ObserverAtOrder> observer_at_n;
    std::optional<AssumptionReport> observer_assumptions;

    bool all_assumptions_ok() const;
};

std::vector<Spectrum> run_spectrum(const RunConfig& cfg);
DesignResult run_design(const RunConfig& cfg);

struct ConvergeResult {
    std::vector<ConvergenceReport> rows;
    MinimalOrderResult minimal;
};

ConvergeResult run_converge(const RunConfig& cfg, int n_min, int n_max,
                            std::optional<double> margin);

struct SimulateResult {
    SimulationTrace trace;
    double fitted_rate = 0.0;
    double predicted_rate = 0.0;  // max Re over the closed-loop window spectrum
};

SimulateResult run_simulate(const RunConfig& cfg);

struct ObserveResult {
    ObserverSimulation sim;
    double fitted_error_rate = 0.0;
    double predicted_rate = 0.0;
};

ObserveResult run_observe(const RunConfig& cfg);

}  // namespace hyperbc
