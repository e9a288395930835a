#pragma once

#include "hyperbc/state_function.hpp"
#include "hyperbc/types.hpp"

namespace hyperbc {

// The transport-coupled plant on z in [0,1]:
//   dt w1 = alpha dz w2,  dt w2 = beta dz w1,  dw3/dt = gamma w2(0,t),
// with w3(t) = w1(0,t), input u(t) = w2(1,t), output y(t) = w1(1,t).
struct PlantParameters {
    double alpha;
    double beta;
    double gamma;
    double v;    // propagation speed sqrt(alpha*beta)
    double tau;  // transport time 1/v

    PlantParameters(double alpha_, double beta_, double gamma_);

    // recurring group beta*gamma*tau
    double c() const { return beta * gamma * tau; }
};

// Boundary condition family w2(1,t) = rho * w1(1,t); rho = 0 is the open loop.
struct BoundaryDynamics {
    cplx rho{0.0, 0.0};
};

// Delta(lambda) = phi_w2(1) - rho*phi_w1(1); its zeros are the eigenvalues of
// the dynamics with boundary condition w2(1) = rho*w1(1).
cplx characteristic_value(const PlantParameters& p, const BoundaryDynamics& bd, cplx lambda);
cplx characteristic_derivative(const PlantParameters& p, const BoundaryDynamics& bd, cplx lambda);

// Flat-normalized closed form (w3 component = 1):
//   w1(z) = cosh(l t z) + (l/(b g t)) sinh(l t z)
//   w2(z) = b t sinh(l t z) + (l/g) cosh(l t z)
StateFunction eigenfunction(const PlantParameters& p, cplx lambda);

// Adjoint eigenfunction at lambda_star = conj(lambda), via the change of
// variables (alpha w1*, -beta w2*, gamma w3*) that maps the adjoint system
// back to the primal form; unnormalized. Verifies lambda_star actually is an
// adjoint eigenvalue of (p, bd).
StateFunction adjoint_eigenfunction(const PlantParameters& p, const BoundaryDynamics& bd,
                                    cplx lambda_star);

// All eigenvalues in the window, located by the argument principle and refined
// to |Delta| < 1e-10.
Spectrum find_spectrum(const PlantParameters& p, const BoundaryDynamics& bd, const Window& w,
                       SpectrumLabel label);

// b_i = alpha * conj(phi*_{i,1}(1))
cplx modal_input_coefficient(const EigenPair& pair, const PlantParameters& p);

// Generator action (alpha w2', beta w1', gamma w2(0)) and its formal adjoint
// (-beta v2', -alpha v1', -beta v2(0)) on closed-form states; boundary
// conditions are the caller's concern.
StateFunction apply_generator(const PlantParameters& p, const StateFunction& x);
StateFunction apply_adjoint_generator(const PlantParameters& p, const StateFunction& x);

}  // namespace hyperbc
