#pragma once

#include "hyperbc/plant.hpp"
#include "hyperbc/target.hpp"

namespace hyperbc {

// Eigenpairs of the boundary-dynamics family (open loop, intermediate,
// observer intermediate): closed-form eigenfunctions and footnote-transformed
// adjoints, biorthonormalized, in modal order.
std::vector<EigenPair> build_basis(const PlantParameters& p, const BoundaryDynamics& bd,
                                   const Window& w, SpectrumLabel label, const QuadratureRule& q);

// Desired-dynamics eigenpairs. The primal eigenfunctions are the same closed
// form at the desired eigenvalues; the adjoints have no closed form (the
// bounded kernel enters the adjoint boundary condition), so the dual basis is
// built by expanding in the intermediate adjoint basis and enforcing
// biorthonormality on the window: psi_j = sum_m conj(inv(G)_{mj}) psi_m^c with
// G_{im} = <phi_i^d, psi_m^c>. Window truncation is the only approximation;
// the windowed Gram identity is then exact by construction.
std::vector<EigenPair> build_desired_basis(const PlantParameters& p, const TargetDynamics& t,
                                           const Window& w, SpectrumLabel label,
                                           const std::vector<EigenPair>& intermediate,
                                           const QuadratureRule& q);

// <phi_i, phi_j*> over the first n pairs.
Eigen::MatrixXcd gram_matrix(const std::vector<EigenPair>& pairs, int n, const QuadratureRule& q);

}  // namespace hyperbc
