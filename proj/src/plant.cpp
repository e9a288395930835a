#include "hyperbc/plant.hpp"

#include <cmath>

#include "hyperbc/rootfind.hpp"

namespace hyperbc {

PlantParameters::PlantParameters(double alpha_, double beta_, double gamma_)
    : alpha(alpha_), beta(beta_), gamma(gamma_) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw ConfigError("plant needs alpha > 0 and beta > 0 (hyperbolicity)");
    if (gamma == 0.0) throw ConfigError("plant needs gamma != 0");
    v = std::sqrt(alpha * beta);
    tau = 1.0 / v;
}

namespace {

cplx phi_w1_at(const PlantParameters& p, cplx lambda, double z) {
    cplx a = lambda * p.tau * z;
    return std::cosh(a) + (lambda / p.c()) * std::sinh(a);
}

cplx phi_w2_at(const PlantParameters& p, cplx lambda, double z) {
    cplx a = lambda * p.tau * z;
    return p.beta * p.tau * std::sinh(a) + (lambda / p.gamma) * std::cosh(a);
}

}  // namespace

cplx characteristic_value(const PlantParameters& p, const BoundaryDynamics& bd, cplx lambda) {
    return phi_w2_at(p, lambda, 1.0) - bd.rho * phi_w1_at(p, lambda, 1.0);
}

cplx characteristic_derivative(const PlantParameters& p, const BoundaryDynamics& bd,
                               cplx lambda) {
    double tau = p.tau;
    cplx a = lambda * tau;
    cplx ch = std::cosh(a), sh = std::sinh(a);
    cplx d_w2 = p.beta * tau * tau * ch + ch / p.gamma + lambda * tau * sh / p.gamma;
    cplx d_w1 = tau * sh + sh / p.c() + lambda * tau * ch / p.c();
    return d_w2 - bd.rho * d_w1;
}

StateFunction eigenfunction(const PlantParameters& p, cplx lambda) {
    cplx a = lambda * p.tau;
    ExpSum w1 = ExpSum::cosh_sinh(1.0, lambda / p.c(), a);
    ExpSum w2 = ExpSum::cosh_sinh(lambda / p.gamma, p.beta * p.tau, a);
    return StateFunction::analytic(std::move(w1), std::move(w2), cplx{1.0, 0.0});
}

StateFunction adjoint_eigenfunction(const PlantParameters& p, const BoundaryDynamics& bd,
                                    cplx lambda_star) {
    cplx lambda = std::conj(lambda_star);
    if (std::abs(characteristic_value(p, bd, lambda)) > 1e-8 * (1.0 + std::abs(lambda)))
        throw NumericalError("adjoint_eigenfunction: lambda_star is not an adjoint eigenvalue");
    // change of variables (alpha w1*, -beta w2*, gamma w3*) reduces the adjoint
    // system to the primal form at lambda_star; invert it on the primal closed form
    cplx a = lambda_star * p.tau;
    ExpSum w1 = ExpSum::cosh_sinh(1.0 / p.alpha, lambda_star / (p.c() * p.alpha), a);
    ExpSum w2 = ExpSum::cosh_sinh(-lambda_star / (p.gamma * p.beta), -p.tau, a);
    return StateFunction::analytic(std::move(w1), std::move(w2), cplx{1.0 / p.gamma, 0.0});
}

Spectrum find_spectrum(const PlantParameters& p, const BoundaryDynamics& bd, const Window& w,
                       SpectrumLabel label) {
    double btau = p.beta * p.tau;
    if (std::abs(btau - bd.rho) < 1e-12 * btau)
        throw NumericalError("boundary reflection rho = beta*tau is degenerate (dead-beat)");
    cplx mu_hat = (btau + bd.rho) / (btau - bd.rho);
    double re_hi = std::max(0.0, std::log(std::abs(mu_hat)) / (2.0 * p.tau)) + 1.0;

    MeromorphicFn fn{[&](cplx z) { return characteristic_value(p, bd, z); },
                     [&](cplx z) { return characteristic_derivative(p, bd, z); },
                     {}};
    Spectrum s;
    s.label = label;
    s.window = w;
    s.eigenvalues = find_zeros_rect(fn, w.re_min, re_hi, -w.im_max, w.im_max);
    assert_simple(s.eigenvalues, to_string(label).c_str());
    sort_canonical(s.eigenvalues);
    return s;
}

cplx modal_input_coefficient(const EigenPair& pair, const PlantParameters& p) {
    if (!pair.normalized) throw ContractViolation("modal_input_coefficient needs a normalized pair");
    return p.alpha * std::conj(pair.adjoint_eigenfunction.eval_w1(1.0));
}

StateFunction apply_generator(const PlantParameters& p, const StateFunction& x) {
    if (x.sampled()) throw ContractViolation("apply_generator needs a closed-form state");
    ExpSum w1 = x.w2.derivative();
    for (auto& c : w1.coef) c *= p.alpha;
    ExpSum w2 = x.w1.derivative();
    for (auto& c : w2.coef) c *= p.beta;
    return StateFunction::analytic(std::move(w1), std::move(w2), p.gamma * x.eval_w2(0.0));
}

StateFunction apply_adjoint_generator(const PlantParameters& p, const StateFunction& x) {
    if (x.sampled()) throw ContractViolation("apply_adjoint_generator needs a closed-form state");
    ExpSum w1 = x.w2.derivative();
    for (auto& c : w1.coef) c *= -p.beta;
    ExpSum w2 = x.w1.derivative();
    for (auto& c : w2.coef) c *= -p.alpha;
    return StateFunction::analytic(std::move(w1), std::move(w2), -p.beta * x.eval_w2(0.0));
}

}  // namespace hyperbc
