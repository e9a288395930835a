#include "hyperbc/simulation.hpp"

#include <cmath>

namespace hyperbc {

Eigen::VectorXcd GridState::w1(const PlantParameters& p) const {
    return (xi_plus + xi_minus) / (2.0 * std::sqrt(p.beta));
}

Eigen::VectorXcd GridState::w2(const PlantParameters& p) const {
    return (xi_plus - xi_minus) / (2.0 * std::sqrt(p.alpha));
}

cplx GridState::output(const PlantParameters& p) const {
    return (xi_plus(m) + xi_minus(m)) / (2.0 * std::sqrt(p.beta));
}

GridState make_grid_state(const PlantParameters& p, int m, const StateFunction& x0) {
    if (m < 2) throw ConfigError("grid needs at least two cells");
    GridState gs;
    gs.m = m;
    gs.xi_plus.resize(m + 1);
    gs.xi_minus.resize(m + 1);
    gs.w3 = x0.w3;
    const double sa = std::sqrt(p.alpha), sb = std::sqrt(p.beta);
    for (int j = 0; j <= m; ++j) {
        double z = static_cast<double>(j) / m;
        cplx w1 = x0.eval_w1(z), w2 = x0.eval_w2(z);
        gs.xi_plus(j) = sb * w1 + sa * w2;
        gs.xi_minus(j) = sb * w1 - sa * w2;
    }
    return gs;
}

namespace {

Eigen::VectorXd trapezoid_weights(int m, double dz) {
    Eigen::VectorXd w = Eigen::VectorXd::Constant(m + 1, dz);
    w(0) *= 0.5;
    w(m) *= 0.5;
    return w;
}

}  // namespace

cplx ModalFeedback::evaluate(const GridState& gs, const PlantParameters& p) const {
    if (k.size() == 0) return {0.0, 0.0};
    Eigen::VectorXcd pw = weights(gs, p);
    return (k.array() * pw.array()).sum();
}

Eigen::VectorXcd ModalFeedback::weights(const GridState& gs, const PlantParameters& p) const {
    Eigen::VectorXd tw = trapezoid_weights(gs.m, gs.dz());
    Eigen::VectorXcd w1 = gs.w1(p).cwiseProduct(tw.cast<cplx>());
    Eigen::VectorXcd w2 = gs.w2(p).cwiseProduct(tw.cast<cplx>());
    return psi1 * w1 + psi2 * w2 + psi3 * gs.w3;
}

ModalFeedback sample_modal_feedback(const std::vector<EigenPair>& pairs,
                                    const std::vector<cplx>& gains, int m) {
    if (pairs.size() != gains.size())
        throw ContractViolation("modal feedback needs one gain per pair");
    const int n = static_cast<int>(pairs.size());
    ModalFeedback fb;
    fb.psi1.resize(n, m + 1);
    fb.psi2.resize(n, m + 1);
    fb.psi3.resize(n);
    fb.k.resize(n);
    for (int i = 0; i < n; ++i) {
        if (!pairs[i].normalized)
            throw ContractViolation("modal feedback needs normalized pairs");
        const auto& psi = pairs[i].adjoint_eigenfunction;
        for (int j = 0; j <= m; ++j) {
            double z = static_cast<double>(j) / m;
            fb.psi1(i, j) = std::conj(psi.eval_w1(z));
            fb.psi2(i, j) = std::conj(psi.eval_w2(z));
        }
        fb.psi3(i) = std::conj(psi.w3);
        fb.k(i) = gains[i];
    }
    return fb;
}

DistributedInjection sample_injection(const std::vector<EigenPair>& pairs,
                                      const std::vector<cplx>& gains, int m) {
    if (pairs.size() != gains.size())
        throw ContractViolation("injection needs one gain per pair");
    DistributedInjection inj;
    inj.s1 = Eigen::VectorXcd::Zero(m + 1);
    inj.s2 = Eigen::VectorXcd::Zero(m + 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& phi = pairs[i].eigenfunction;
        for (int j = 0; j <= m; ++j) {
            double z = static_cast<double>(j) / m;
            inj.s1(j) += gains[i] * phi.eval_w1(z);
            inj.s2(j) += gains[i] * phi.eval_w2(z);
        }
        inj.s3 += gains[i] * phi.w3;
    }
    return inj;
}

void step(GridState& gs, const PlantParameters& p, cplx rho, const ModalFeedback* fb,
          cplx u_ext) {
    const int m = gs.m;
    const double sa = std::sqrt(p.alpha), sb = std::sqrt(p.beta);
    const double dt = gs.dz() * p.tau;

    Eigen::VectorXcd nxp(m + 1), nxm(m + 1);
    nxp.head(m) = gs.xi_plus.tail(m);
    nxm.tail(m) = gs.xi_minus.head(m);

    const double a = dt * p.gamma / (2.0 * sa);
    cplx w3n = (gs.w3 * (1.0 - a * sb) + a * (gs.xi_plus(0) + nxp(0))) / (1.0 + a * sb);
    nxm(0) = 2.0 * sb * w3n - nxp(0);

    const cplx rat = rho * sa / sb;
    if (std::abs(1.0 - rat) < 1e-12)
        throw NumericalError("dead-beat reflection leaves the outgoing boundary value undefined");

    cplx um{0.0, 0.0};
    GridState cand;
    auto close = [&] { nxp(m) = ((1.0 + rat) * nxm(m) + 2.0 * sa * (um + u_ext)) / (1.0 - rat); };
    close();
    if (fb) {
        for (int it = 0; it < 2; ++it) {
            cand.m = m;
            cand.xi_plus = nxp;
            cand.xi_minus = nxm;
            cand.w3 = w3n;
            um = fb->evaluate(cand, p);
            close();
        }
    }

    gs.xi_plus = std::move(nxp);
    gs.xi_minus = std::move(nxm);
    gs.w3 = w3n;
    gs.t += dt;
}

double state_energy(const GridState& gs, const PlantParameters& p) {
    Eigen::VectorXd tw = trapezoid_weights(gs.m, gs.dz());
    double e = (gs.w1(p).cwiseAbs2() + gs.w2(p).cwiseAbs2()).dot(tw);
    return e + std::norm(gs.w3);
}

SimulationTrace simulate(const PlantParameters& p, cplx rho, const ModalFeedback* fb,
                         const StateFunction& x0, double T, int m, bool record_weights) {
    if (T < 0.0) throw ConfigError("simulation horizon must be nonnegative");
    GridState gs = make_grid_state(p, m, x0);
    const double dt = gs.dz() * p.tau;
    const int steps = T == 0.0 ? 0 : std::max(1, static_cast<int>(std::lround(T / dt)));

    SimulationTrace tr;
    tr.times.reserve(steps + 1);
    tr.energy.reserve(steps + 1);
    tr.control.reserve(steps + 1);
    const bool weights = record_weights && fb != nullptr;
    if (weights) tr.modal_weights.resize(fb->k.size(), steps + 1);

    auto record = [&](int j) {
        tr.times.push_back(gs.t);
        tr.energy.push_back(state_energy(gs, p));
        cplx u = rho * gs.output(p);
        if (fb) u += fb->evaluate(gs, p);
        tr.control.push_back(u);
        if (weights) tr.modal_weights.col(j) = fb->weights(gs, p);
    };

    record(0);
    for (int j = 1; j <= steps; ++j) {
        step(gs, p, rho, fb);
        record(j);
    }
    return tr;
}

namespace {

void error_step(GridState& gs, const PlantParameters& p, cplx rho_o,
                const DistributedInjection& inj, const Eigen::VectorXcd& sp,
                const Eigen::VectorXcd& sm) {
    const int m = gs.m;
    const double sa = std::sqrt(p.alpha), sb = std::sqrt(p.beta);
    const double dt = gs.dz() * p.tau;

    Eigen::VectorXcd tp(m + 1), tm(m + 1);
    tp.head(m) = gs.xi_plus.tail(m);
    tp(m) = cplx{0.0, 0.0};
    tm.tail(m) = gs.xi_minus.head(m);
    tm(0) = cplx{0.0, 0.0};

    const double a = dt * p.gamma / (2.0 * sa);
    const cplx rat = rho_o * sa / sb;
    if (std::abs(1.0 - rat) < 1e-12)
        throw NumericalError("dead-beat reflection leaves the outgoing boundary value undefined");

    cplx ey_old = (gs.xi_plus(m) + gs.xi_minus(m)) / (2.0 * sb);
    cplx ey_new = ey_old;
    Eigen::VectorXcd nxp, nxm;
    cplx w3n;
    for (int it = 0; it < 2; ++it) {
        nxp = tp;
        nxm = tm;
        nxp.head(m) += 0.5 * dt * (sp.tail(m) * ey_old + sp.head(m) * ey_new);
        nxm.tail(m) += 0.5 * dt * (sm.head(m) * ey_old + sm.tail(m) * ey_new);
        cplx num = gs.w3 * (1.0 - a * sb) + a * (gs.xi_plus(0) + nxp(0)) +
                   0.5 * dt * inj.s3 * (ey_old + ey_new);
        w3n = num / (1.0 + a * sb);
        nxm(0) = 2.0 * sb * w3n - nxp(0);
        nxp(m) = (1.0 + rat) * nxm(m) / (1.0 - rat);
        ey_new = (nxp(m) + nxm(m)) / (2.0 * sb);
    }

    gs.xi_plus = std::move(nxp);
    gs.xi_minus = std::move(nxm);
    gs.w3 = w3n;
    gs.t += dt;
}

}  // namespace

ObserverSimulation simulate_observer(const PlantParameters& p, cplx rho_o,
                                     const DistributedInjection& inj, const StateFunction& x0,
                                     const StateFunction& e0, double T, int m) {
    if (T < 0.0) throw ConfigError("simulation horizon must be nonnegative");
    GridState plant = make_grid_state(p, m, x0);
    GridState err = make_grid_state(p, m, e0);
    const double dt = plant.dz() * p.tau;
    const int steps = T == 0.0 ? 0 : std::max(1, static_cast<int>(std::lround(T / dt)));

    const double sa = std::sqrt(p.alpha), sb = std::sqrt(p.beta);
    Eigen::VectorXcd sp = sb * inj.s1 + sa * inj.s2;
    Eigen::VectorXcd sm = sb * inj.s1 - sa * inj.s2;

    ObserverSimulation sim;
    auto record = [&] {
        sim.plant.times.push_back(plant.t);
        sim.plant.energy.push_back(state_energy(plant, p));
        sim.plant.control.push_back(cplx{0.0, 0.0});
        sim.error.times.push_back(err.t);
        sim.error.energy.push_back(state_energy(err, p));
        sim.error.control.push_back(err.output(p));
    };

    record();
    for (int j = 1; j <= steps; ++j) {
        step(plant, p, cplx{0.0, 0.0});
        error_step(err, p, rho_o, inj, sp, sm);
        record();
    }
    return sim;
}

double decay_rate(const SimulationTrace& trace, double t_start) {
    double st = 0.0, sy = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        if (trace.times[i] < t_start || trace.energy[i] <= 1e-14) continue;
        st += trace.times[i];
        sy += 0.5 * std::log(trace.energy[i]);
        ++n;
    }
    if (n < 2) throw NumericalError("not enough samples to fit a decay rate");
    st /= n;
    sy /= n;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        if (trace.times[i] < t_start || trace.energy[i] <= 1e-14) continue;
        double dtc = trace.times[i] - st;
        num += dtc * (0.5 * std::log(trace.energy[i]) - sy);
        den += dtc * dtc;
    }
    if (den == 0.0) throw NumericalError("degenerate time window for the decay fit");
    return num / den;
}

}  // namespace hyperbc
