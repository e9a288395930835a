#include "hyperbc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hyperbc {

namespace {

Window basis_window(const Window& w, int n_max, double tau) {
    double step = std::numbers::pi / tau;
    double im = std::max(w.im_max, (n_max / 2 + 2) * step) + 7.0 * step;
    return Window{w.re_min, im};
}

const TargetSpec& target_for(const RunConfig& cfg, SpectrumLabel intermediate_label) {
    if (intermediate_label != SpectrumLabel::ObserverIntermediate) return cfg.controller_target;
    if (!cfg.observer_target) throw ConfigError("config has no observer_target");
    return *cfg.observer_target;
}

}  // namespace

const std::vector<EigenPair>& SynthesisContext::basis_for(BasisChoice choice) const {
    switch (choice) {
        case BasisChoice::OpenLoop: return open_basis;
        case BasisChoice::Intermediate: return intermediate_basis;
        case BasisChoice::Desired: return desired_basis;
    }
    throw ContractViolation("unknown basis choice");
}

SynthesisContext make_context(const RunConfig& cfg, int n_max, SpectrumLabel intermediate_label,
                              SpectrumLabel desired_label) {
    const TargetSpec& spec = target_for(cfg, intermediate_label);
    PlantParameters plant(cfg.alpha, cfg.beta, cfg.gamma);
    TargetDynamics target(spec.kappa, spec.mu, plant.tau);

    SynthesisContext ctx{plant,
                         target,
                         BoundaryDynamics{cplx{0.0, 0.0}},
                         BoundaryDynamics{desired_boundary_unbounded_coefficient(target, plant)},
                         build_bounded_kernel(plant, target),
                         QuadratureRule::gauss_legendre(cfg.quadrature_nodes),
                         cfg.window,
                         {},
                         {},
                         {},
                         {},
                         {},
                         {},
                         {},
                         std::numbers::pi / plant.tau};

    Window bw = basis_window(cfg.window, n_max, plant.tau);
    ctx.open_basis = build_basis(plant, ctx.open_bd, bw, SpectrumLabel::OpenLoop, ctx.quad);
    ctx.intermediate_basis =
        build_basis(plant, ctx.intermediate_bd, bw, intermediate_label, ctx.quad);
    ctx.desired_basis =
        build_desired_basis(plant, target, bw, desired_label, ctx.intermediate_basis, ctx.quad);

    ctx.open_loop = find_spectrum(plant, ctx.open_bd, cfg.window, SpectrumLabel::OpenLoop);
    ctx.intermediate = find_spectrum(plant, ctx.intermediate_bd, cfg.window, intermediate_label);
    ctx.desired = desired_spectrum(target, cfg.window, desired_label);

    std::vector<cplx> continuation;
    for (cplx z : desired_branch_points(target, cfg.window.im_max, 2))
        if (!cfg.window.contains(z)) continuation.push_back(z);
    for (cplx z : kappa_roots(target))
        if (!cfg.window.contains(z)) continuation.push_back(z);
    ctx.desired_gaps = gap_distances(ctx.desired.eigenvalues, continuation);
    return ctx;
}

SynthesisContext make_controller_context(const RunConfig& cfg, int n_max) {
    return make_context(cfg, n_max, SpectrumLabel::Intermediate, SpectrumLabel::Desired);
}

SynthesisContext make_observer_context(const RunConfig& cfg, int n_max) {
    return make_context(cfg, n_max, SpectrumLabel::ObserverIntermediate,
                        SpectrumLabel::ObserverDesired);
}

DesignAtOrder design_at_order(const SynthesisContext& ctx, const RunConfig& cfg, int n) {
    DesignAtOrder d;
    d.feedback = make_feedback(ctx.intermediate_bd.rho, n, cfg.basis, ctx.basis_for(cfg.basis),
                               ctx.kernel, ctx.target);
    d.reduced = assemble_reduced(ctx.plant, d.feedback, ctx.basis_for(cfg.basis),
                                 ctx.intermediate_basis, ctx.quad);
    if (cfg.basis == BasisChoice::Intermediate) {
        d.closed_loop =
            closed_loop_spectrum_matrix(d.reduced, d.feedback, ctx.intermediate, ctx.window);
    } else {
        CharacteristicReference ref =
            make_intermediate_reference(d.feedback, ctx.basis_for(cfg.basis),
                                        ctx.intermediate_basis, ctx.intermediate, ctx.plant,
                                        ctx.quad);
        d.closed_loop = closed_loop_spectrum_char(ref, ctx.window, SpectrumLabel::ClosedLoop);
    }
    DiskFamily disks = make_disks(ctx.desired.eigenvalues, ctx.desired_gaps, cfg.epsilon);
    d.convergence = verify_theorem_conv(d.closed_loop, disks, ctx.window);
    d.convergence.n = n;
    return d;
}

ObserverAtOrder observer_at_order(const SynthesisContext& ctx, const RunConfig& cfg, int n) {
    ObserverAtOrder o;
    o.observer = make_observer(ctx.plant, ctx.target, n, ctx.intermediate_basis, ctx.quad);
    o.closed_loop = observer_closed_loop_spectrum(o.observer, ctx.intermediate, ctx.window);
    DiskFamily disks = make_disks(ctx.desired.eigenvalues, ctx.desired_gaps, cfg.epsilon);
    o.convergence = verify_theorem_conv(o.closed_loop, disks, ctx.window);
    o.convergence.n = n;
    return o;
}

namespace {

// Desired-basis input (controller) or output (observer) coefficients aligned
// with the windowed desired spectrum.
std::vector<cplx> desired_coefficients(const SynthesisContext& ctx, bool observer_side) {
    std::vector<cplx> out;
    out.reserve(ctx.desired.eigenvalues.size());
    for (cplx lam : ctx.desired.eigenvalues) {
        const EigenPair* hit = nullptr;
        for (const auto& pair : ctx.desired_basis) {
            if (std::abs(pair.lambda - lam) <= 1e-9 * std::max(1.0, std::abs(lam))) {
                hit = &pair;
                break;
            }
        }
        if (!hit) throw ContractViolation("desired basis does not cover the report window");
        out.push_back(observer_side ? hit->eigenfunction.eval_w1(1.0)
                                    : modal_input_coefficient(*hit, ctx.plant));
    }
    return out;
}

AssumptionReport check_assumptions(const SynthesisContext& ctx, const RunConfig& cfg,
                                   bool observer_side) {
    std::vector<cplx> b = desired_coefficients(ctx, observer_side);
    return check_assumption_A2(ctx.desired, ctx.desired_gaps, b, ctx.target, ctx.window,
                               cfg.samples_per_disk, cfg.grid_samples);
}

}  // namespace

bool DesignResult::all_assumptions_ok() const {
    bool ok = assumptions.riesz_ok && assumptions.discrete_ok && assumptions.simple_ok &&
              assumptions.a2_ok();
    if (observer_assumptions)
        ok = ok && observer_assumptions->riesz_ok && observer_assumptions->discrete_ok &&
             observer_assumptions->simple_ok && observer_assumptions->a2_ok();
    return ok;
}

std::vector<Spectrum> run_spectrum(const RunConfig& cfg) {
    SynthesisContext ctx = make_controller_context(cfg, cfg.n);
    DesignAtOrder at = design_at_order(ctx, cfg, cfg.n);
    std::vector<Spectrum> out{ctx.open_loop, ctx.intermediate, ctx.desired, at.closed_loop};
    if (cfg.observer_target) {
        SynthesisContext octx = make_observer_context(cfg, cfg.n);
        ObserverAtOrder oat = observer_at_order(octx, cfg, cfg.n);
        out.push_back(octx.intermediate);
        out.push_back(octx.desired);
        out.push_back(oat.closed_loop);
    }
    return out;
}

DesignResult run_design(const RunConfig& cfg) {
    SynthesisContext ctx = make_controller_context(cfg, cfg.n);
    DesignAtOrder at = design_at_order(ctx, cfg, cfg.n);
    AssumptionReport assumptions = check_assumptions(ctx, cfg, false);
    DesignResult r{std::move(ctx), std::move(at), std::move(assumptions), {}, {}, {}};
    if (cfg.observer_target) {
        r.observer_ctx = make_observer_context(cfg, cfg.n);
        r.observer_at_n = observer_at_order(*r.observer_ctx, cfg, cfg.n);
        r.observer_assumptions = check_assumptions(*r.observer_ctx, cfg, true);
    }
    return r;
}

ConvergeResult run_converge(const RunConfig& cfg, int n_min, int n_max,
                            std::optional<double> margin) {
    if (n_min < 0 || n_max < n_min) throw ConfigError("invalid order range");
    SynthesisContext ctx = make_controller_context(cfg, n_max);
    ConvergeResult res;
    res.rows.reserve(n_max - n_min + 1);
    for (int n = n_min; n <= n_max; ++n)
        res.rows.push_back(design_at_order(ctx, cfg, n).convergence);
    SweepCriterion crit;
    if (margin) {
        crit.kind = SweepCriterion::StabilityMargin;
        crit.margin = *margin;
    }
    res.minimal = minimal_order(res.rows, crit);
    return res;
}

namespace {

double fitted_or_nan(const SimulationTrace& trace, double t_start) {
    try {
        return decay_rate(trace, t_start);
    } catch (const NumericalError&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

double max_re(const Spectrum& s) {
    double m = -std::numeric_limits<double>::infinity();
    for (cplx z : s.eigenvalues) m = std::max(m, z.real());
    return m;
}

}  // namespace

SimulateResult run_simulate(const RunConfig& cfg) {
    SynthesisContext ctx = make_controller_context(cfg, cfg.n);
    DesignAtOrder at = design_at_order(ctx, cfg, cfg.n);
    ModalFeedback fb = sample_modal_feedback(at.feedback.pairs, at.feedback.gains, cfg.cells);
    StateFunction x0 = initial_state(cfg);
    SimulateResult r;
    r.trace = simulate(ctx.plant, ctx.intermediate_bd.rho, &fb, x0, cfg.horizon, cfg.cells);
    r.fitted_rate = fitted_or_nan(r.trace, 0.3 * cfg.horizon);
    r.predicted_rate = max_re(at.closed_loop);
    return r;
}

ObserveResult run_observe(const RunConfig& cfg) {
    if (!cfg.observer_target) throw ConfigError("observe needs an observer_target");
    SynthesisContext ctx = make_observer_context(cfg, cfg.n);
    ObserverAtOrder at = observer_at_order(ctx, cfg, cfg.n);
    DistributedInjection inj =
        sample_injection(at.observer.pairs, at.observer.l, cfg.cells);
    StateFunction x0 = initial_state(cfg);
    StateFunction e0 = x0;
    for (auto& c : e0.w1.coef) c = -c;
    for (auto& c : e0.w2.coef) c = -c;
    e0.w1_samples = -e0.w1_samples;
    e0.w2_samples = -e0.w2_samples;
    e0.w3 = -e0.w3;
    ObserveResult r;
    r.sim = simulate_observer(ctx.plant, at.observer.rho_o, inj, x0, e0, cfg.horizon, cfg.cells);
    r.fitted_error_rate = fitted_or_nan(r.sim.error, 0.3 * cfg.horizon);
    r.predicted_rate = max_re(at.closed_loop);
    return r;
}

}  // namespace hyperbc
