#pragma once

#include "hyperbc/eigenbasis.hpp"

namespace hyperbc {

// Bounded part of the control law acting on the flat trajectory:
// K_nu chi = c_plus*chi(t+tau) + c_minus*chi(t-tau).
struct BoundedKernel {
    cplx c_plus{0.0, 0.0};
    cplx c_minus{0.0, 0.0};

    bool is_zero() const { return c_plus == cplx{0.0, 0.0} && c_minus == cplx{0.0, 0.0}; }
};

enum class BasisChoice { OpenLoop, Intermediate, Desired };

std::string to_string(BasisChoice b);
BasisChoice basis_from_string(const std::string& s);

// Modal feedback of order n over a chosen basis: u = rho*y + sum_i k_i <x, phi_i*>.
struct FeedbackApproximation {
    cplx rho{0.0, 0.0};
    int n = 0;
    BasisChoice basis = BasisChoice::Intermediate;
    std::vector<EigenPair> pairs;  // first n pairs of the chosen basis
    std::vector<cplx> gains;       // k_i
};

// Reduced model in intermediate-adjoint coordinates. For the Intermediate
// basis this is the n x n eigenbasis projection; for other bases the gains
// are carried over by the windowed Gram system and the model spans the whole
// reference window (truncation records its size).
struct ReducedModel {
    Eigen::MatrixXcd A_n;
    Eigen::VectorXcd B_n;
    Eigen::VectorXcd K_n;
    int truncation = 0;
};

// c_plus = (beta*gamma*tau - kappa0)/(gamma*(mu+1)),
// c_minus = -mu*(beta*gamma*tau + kappa0)/(gamma*(mu+1)).
// The sign of c_minus is normative: it is fixed by the requirement that the
// desired characteristic function factor as (lambda+kappa0)(e^{lt}+mu e^{-lt})
// up to a constant, which the closed-loop spectrum tests verify end to end.
BoundedKernel build_bounded_kernel(const PlantParameters& p, const TargetDynamics& t);

// k_i = phi_i.w3 * (c_plus e^{lambda_i tau} + c_minus e^{-lambda_i tau})
cplx modal_gain(const EigenPair& pair, const BoundedKernel& kern, const TargetDynamics& t);

FeedbackApproximation make_feedback(cplx rho, int n, BasisChoice basis,
                                    const std::vector<EigenPair>& basis_pairs,
                                    const BoundedKernel& kern, const TargetDynamics& t);

// Reference data for the closed-loop characteristic function
//   g(lambda) = 1 - sum_i m_i b_i / (lambda - lambda_i)
// over a windowed reference spectrum. m_i are the modification coefficients
// of the applied feedback relative to the reference dynamics:
//   intermediate reference: m_i = K^n phi_i^c (exactly zero beyond n for the
//   Intermediate basis), desired reference: m_i = (K^n - K) phi_i^d.
// tail_bound estimates the dropped off-window contribution of |sum m_i b_i/(lambda-lambda_i)|.
struct CharacteristicReference {
    std::vector<cplx> lambdas;
    std::vector<cplx> m;
    std::vector<cplx> b;
    Spectrum reference;  // windowed reference spectrum (union source)
    double tail_bound = 0.0;
};

// Gains of the approximation expressed in intermediate coordinates: for the
// Intermediate basis these are (k_1..k_n, 0, ...); otherwise the solution of
// the windowed Gram system G m = (k_1..k_n, 0, ...) with G_ij = <phi_i^*, psi_j^c>
// over the full window of the chosen basis.
Eigen::VectorXcd intermediate_coordinate_gains(const FeedbackApproximation& fb,
                                               const std::vector<EigenPair>& basis_window,
                                               const std::vector<EigenPair>& intermediate,
                                               const QuadratureRule& q);

ReducedModel assemble_reduced(const PlantParameters& p, const FeedbackApproximation& fb,
                              const std::vector<EigenPair>& basis_window,
                              const std::vector<EigenPair>& intermediate,
                              const QuadratureRule& q);

// Union formula: eig(A_n + B_n K_n^T) plus the windowed reference eigenvalues
// beyond the truncation. Requires basis = Intermediate. Zero gains or n = 0
// return the intermediate spectrum object unchanged.
Spectrum closed_loop_spectrum_matrix(const ReducedModel& rm, const FeedbackApproximation& fb,
                                     const Spectrum& intermediate, const Window& w);

CharacteristicReference make_intermediate_reference(const FeedbackApproximation& fb,
                                                    const std::vector<EigenPair>& basis_window,
                                                    const std::vector<EigenPair>& intermediate,
                                                    const Spectrum& intermediate_sp,
                                                    const PlantParameters& p,
                                                    const QuadratureRule& q);

CharacteristicReference make_desired_reference(const FeedbackApproximation& fb,
                                               const std::vector<EigenPair>& desired,
                                               const Spectrum& desired_sp,
                                               const BoundedKernel& kern, const TargetDynamics& t,
                                               const PlantParameters& p, const QuadratureRule& q);

cplx characteristic_g(cplx lambda, const CharacteristicReference& ref);

// Zeros of g on the window (argument principle + Newton) united with the
// reference eigenvalues whose modification coefficient is exactly zero.
Spectrum closed_loop_spectrum_char(const CharacteristicReference& ref, const Window& w,
                                   SpectrumLabel label);

}  // namespace hyperbc
