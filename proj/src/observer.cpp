#include "hyperbc/observer.hpp"

#include <algorithm>
#include <cmath>

namespace hyperbc {

cplx HocfAdjointEigenvector::head(int i) const {
    if (i < 0 || i >= N) throw ContractViolation("finite component index out of range");
    return r * std::pow(lambda_bar, i);
}

cplx HocfAdjointEigenvector::tail(double theta) const {
    return r * std::exp(lambda_bar * theta) * std::pow(lambda_bar, N);
}

cplx hccf_flat_output(const std::vector<cplx>& head, const std::function<cplx(double)>& tail,
                      int N, double theta_minus, const QuadratureRule& q) {
    if (N == 0) return tail(0.0);
    if (static_cast<int>(head.size()) < N)
        throw ContractViolation("finite part shorter than the differential order");
    cplx s = 0.0;
    double fact = 1.0;
    double pw = 1.0;
    for (int i = 0; i < N; ++i) {
        if (i > 0) {
            pw *= -theta_minus;
            fact *= i;
        }
        s += pw / fact * head[i];
    }
    // integral over [theta_minus, 0] of (-theta)^{N-1}/(N-1)! tail(theta)
    double fact_n = 1.0;
    for (int i = 2; i < N; ++i) fact_n *= i;
    cplx integral = 0.0;
    for (int k = 0; k < q.size(); ++k) {
        double theta = theta_minus * (1.0 - q.nodes[k]);
        integral += q.weights[k] * std::pow(-theta, N - 1) / fact_n * tail(theta);
    }
    return s + integral * (-theta_minus);
}

cplx hccf_flat_output(const HocfAdjointEigenvector& h, const QuadratureRule& q) {
    std::vector<cplx> head(h.N);
    for (int i = 0; i < h.N; ++i) head[i] = h.head(i);
    return hccf_flat_output(head, [&](double theta) { return h.tail(theta); }, h.N,
                            h.theta_minus, q);
}

cplx adjoint_flat_scaling(const PlantParameters& p, const TargetDynamics& t_obs, cplx rho_o,
                          const EigenPair& pair) {
    cplx lbar = std::conj(pair.lambda);
    cplx denom = 2.0 - std::exp(-lbar * t_obs.tau);
    if (std::abs(denom) < 1e-12)
        throw NumericalError("degenerate flat-output scaling for the transformed adjoint");
    cplx lhs_scale = (p.beta * p.tau - rho_o) / (2.0 * p.beta * p.tau);
    return lhs_scale * pair.adjoint_eigenfunction.w3 / denom;
}

cplx observer_modal_gain(const PlantParameters& p, const TargetDynamics& t_obs,
                         const HocfAdjointEigenvector& hv, const QuadratureRule& q) {
    BoundedKernel kern = build_bounded_kernel(p, t_obs);
    cplx lambda = std::conj(hv.lambda_bar);
    cplx lt = lambda * t_obs.tau;
    cplx symbol = kern.c_plus * std::exp(lt) + kern.c_minus * std::exp(-lt);
    return p.gamma * (t_obs.mu + 1.0) * std::conj(hccf_flat_output(hv, q)) * symbol;
}

ObserverApproximation make_observer(const PlantParameters& p, const TargetDynamics& t_obs,
                                    int n, const std::vector<EigenPair>& observer_pairs,
                                    const QuadratureRule& q) {
    if (n < 0) throw ContractViolation("negative approximation order");
    if (static_cast<std::size_t>(n) > observer_pairs.size())
        throw ContractViolation("observer basis window smaller than the approximation order");
    ObserverApproximation obs;
    obs.rho_o = desired_boundary_unbounded_coefficient(t_obs, p);
    obs.n = n;
    obs.pairs.assign(observer_pairs.begin(), observer_pairs.begin() + n);
    obs.r.reserve(n);
    obs.l.reserve(n);
    for (const auto& pair : obs.pairs) {
        HocfAdjointEigenvector hv;
        hv.lambda_bar = std::conj(pair.lambda);
        hv.N = t_obs.N;
        hv.theta_minus = t_obs.theta_minus;
        hv.theta_plus = t_obs.theta_plus;
        hv.r = adjoint_flat_scaling(p, t_obs, obs.rho_o, pair);
        obs.r.push_back(hv.r);
        obs.l.push_back(observer_modal_gain(p, t_obs, hv, q));
    }
    // the injection must stay real-valued, mirroring the feedback truncation:
    // an orphaned conjugate-pair member carries no gain
    if (n >= 1) {
        const cplx last = obs.pairs.back().lambda;
        if (std::abs(last.imag()) > 1e-9 * std::max(1.0, std::abs(last))) {
            bool paired = false;
            for (int i = 0; i + 1 < n; ++i)
                if (std::abs(obs.pairs[i].lambda - std::conj(last)) <=
                    1e-6 * std::max(1.0, std::abs(last))) {
                    paired = true;
                    break;
                }
            if (!paired) obs.l.back() = cplx{0.0, 0.0};
        }
    }
    return obs;
}

namespace {

bool all_zero(const std::vector<cplx>& v) {
    return std::all_of(v.begin(), v.end(), [](cplx c) { return c == cplx{0.0, 0.0}; });
}

CharacteristicReference dual_reference(const ObserverApproximation& obs,
                                       const Spectrum& observer_intermediate) {
    CharacteristicReference ref;
    ref.reference = observer_intermediate;
    std::vector<cplx> modal = observer_intermediate.eigenvalues;
    sort_modal(modal);
    const std::size_t K = modal.size();
    ref.lambdas = std::move(modal);
    ref.m.assign(K, cplx{0.0, 0.0});
    ref.b.assign(K, cplx{0.0, 0.0});
    for (int i = 0; i < obs.n; ++i) {
        if (std::abs(ref.lambdas[i] - obs.pairs[i].lambda) >
            1e-9 * std::max(1.0, std::abs(ref.lambdas[i])))
            throw ContractViolation("observer pairs misaligned with the intermediate spectrum");
        ref.m[i] = obs.l[i];
        ref.b[i] = obs.pairs[i].eigenfunction.eval_w1(1.0);
    }
    return ref;
}

}  // namespace

Spectrum observer_closed_loop_spectrum(const ObserverApproximation& obs,
                                       const Spectrum& observer_intermediate, const Window& w) {
    if (obs.n == 0 || all_zero(obs.l)) return observer_intermediate;

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(obs.n, obs.n);
    Eigen::VectorXcd l(obs.n), c(obs.n);
    for (int i = 0; i < obs.n; ++i) {
        M(i, i) = obs.pairs[i].lambda;
        l(i) = obs.l[i];
        c(i) = obs.pairs[i].eigenfunction.eval_w1(1.0);
    }
    M += l * c.transpose();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success)
        throw NumericalError("eigenvalue iteration failed on the reduced observer matrix");

    Spectrum s;
    s.label = SpectrumLabel::ObserverClosedLoop;
    s.window = w;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (w.contains(es.eigenvalues()(i))) s.eigenvalues.push_back(es.eigenvalues()(i));
    // residual tail by value, matching the feedback-side union semantics
    for (cplx lam : observer_intermediate.eigenvalues) {
        bool kept = false;
        for (const auto& pair : obs.pairs)
            if (std::abs(lam - pair.lambda) <= 1e-9 * std::max(1.0, std::abs(lam))) {
                kept = true;
                break;
            }
        if (!kept) s.eigenvalues.push_back(lam);
    }
    assert_simple(s.eigenvalues, "observer closed-loop spectrum");
    sort_canonical(s.eigenvalues);
    return s;
}

Spectrum observer_closed_loop_spectrum_char(const ObserverApproximation& obs,
                                            const Spectrum& observer_intermediate,
                                            const Window& w) {
    CharacteristicReference ref = dual_reference(obs, observer_intermediate);
    return closed_loop_spectrum_char(ref, w, SpectrumLabel::ObserverClosedLoop);
}

}  // namespace hyperbc
