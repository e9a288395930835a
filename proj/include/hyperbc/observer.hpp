#pragma once

#include <functional>

#include "hyperbc/feedback.hpp"

namespace hyperbc {

// Adjoint eigenvector in observer-canonical coordinates:
// r * (1, lbar, ..., lbar^{N-1}, theta -> e^{lbar theta} lbar^N) on [-tau, tau].
struct HocfAdjointEigenvector {
    cplx r{0.0, 0.0};
    cplx lambda_bar{0.0, 0.0};
    int N = 1;
    double theta_minus = 0.0;
    double theta_plus = 0.0;

    cplx head(int i) const;          // component i (0-based) of the finite part
    cplx tail(double theta) const;   // component N+1 evaluated at theta
};

// Observer gain approximation: boundary injection coefficient rho_o plus
// modal gains l_i over the observer-intermediate eigenbasis.
struct ObserverApproximation {
    cplx rho_o{0.0, 0.0};
    int n = 0;
    std::vector<cplx> r;
    std::vector<cplx> l;
    std::vector<EigenPair> pairs;
};

// Flat output in observer-canonical coordinates:
// sum_{i<N} (-theta_minus)^i/i! h_{i+1} + int_{theta_minus}^0 (-theta)^{N-1}/(N-1)! h_{N+1}(theta) dtheta
// (the point value h(0) for N = 0).
cplx hccf_flat_output(const std::vector<cplx>& head, const std::function<cplx(double)>& tail,
                      int N, double theta_minus, const QuadratureRule& q);
cplx hccf_flat_output(const HocfAdjointEigenvector& h, const QuadratureRule& q);

// Scaling r_i matching the flat output of the transformed adjoint eigenvector
// to the original-coordinate one: r_i (2 - e^{-lbar_i tau}) = (beta tau - rho)/(2 beta tau) * psi_{i,3}.
cplx adjoint_flat_scaling(const PlantParameters& p, const TargetDynamics& t_obs, cplx rho_o,
                          const EigenPair& pair);

// Modal observer gain from the transformed adjoint eigenvector. Normative
// convention (fixed by the duality test, which requires the observer
// closed-loop spectrum to mirror the controller one): the gain couples the
// flat output of hv with the observer-side kernel symbol,
//   l_i = gamma*(mu_o+1) * conj(Psi_xi hv) * (c_plus^o e^{l_i tau} + c_minus^o e^{-l_i tau}),
// equivalently l_i = gamma * conj(psi_{i,3}) * K_nu^o e^{l_i theta}.
cplx observer_modal_gain(const PlantParameters& p, const TargetDynamics& t_obs,
                         const HocfAdjointEigenvector& hv, const QuadratureRule& q);

ObserverApproximation make_observer(const PlantParameters& p, const TargetDynamics& t_obs,
                                    int n, const std::vector<EigenPair>& observer_pairs,
                                    const QuadratureRule& q);

// sigma(A^o + L^n C^o): eig(diag(lambda_i^o) + l c^T) with c_i = phi_i.w1(1),
// united with the unperturbed observer-intermediate tail.
Spectrum observer_closed_loop_spectrum(const ObserverApproximation& obs,
                                       const Spectrum& observer_intermediate, const Window& w);

// Dual characteristic-function cross-check: zeros of 1 - sum l_i c_i/(lambda - lambda_i).
Spectrum observer_closed_loop_spectrum_char(const ObserverApproximation& obs,
                                            const Spectrum& observer_intermediate, const Window& w);

}  // namespace hyperbc
