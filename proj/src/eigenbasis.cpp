#include "hyperbc/eigenbasis.hpp"

namespace hyperbc {

std::vector<EigenPair> build_basis(const PlantParameters& p, const BoundaryDynamics& bd,
                                   const Window& w, SpectrumLabel label,
                                   const QuadratureRule& q) {
    Spectrum s = find_spectrum(p, bd, w, label);
    sort_modal(s.eigenvalues);
    std::vector<EigenPair> pairs;
    pairs.reserve(s.eigenvalues.size());
    for (cplx lam : s.eigenvalues) {
        EigenPair pair;
        pair.lambda = lam;
        pair.eigenfunction = eigenfunction(p, lam);
        pair.adjoint_eigenfunction = adjoint_eigenfunction(p, bd, std::conj(lam));
        pairs.push_back(std::move(pair));
    }
    return biorthonormalize(std::move(pairs), q);
}

std::vector<EigenPair> build_desired_basis(const PlantParameters& p, const TargetDynamics& t,
                                           const Window& w, SpectrumLabel label,
                                           const std::vector<EigenPair>& intermediate,
                                           const QuadratureRule& q) {
    Spectrum s = desired_spectrum(t, w, label);
    sort_modal(s.eigenvalues);
    size_t K = std::min(s.eigenvalues.size(), intermediate.size());

    std::vector<StateFunction> primal;
    primal.reserve(K);
    for (size_t i = 0; i < K; ++i) primal.push_back(eigenfunction(p, s.eigenvalues[i]));

    Eigen::MatrixXcd G(K, K);
    for (size_t i = 0; i < K; ++i)
        for (size_t m = 0; m < K; ++m)
            G(i, m) = inner_product(primal[i], intermediate[m].adjoint_eigenfunction, q);
    Eigen::MatrixXcd A = G.partialPivLu().inverse();

    // psi_j = sum_m conj(A_mj) psi_m^c makes <phi_i, psi_j> = (G A)_ij = delta_ij
    std::vector<EigenPair> pairs(K);
    for (size_t j = 0; j < K; ++j) {
        StateFunction dual;
        dual.w3 = {0.0, 0.0};
        for (size_t m = 0; m < K; ++m) {
            cplx a = std::conj(A(m, j));
            const StateFunction& psi = intermediate[m].adjoint_eigenfunction;
            dual.w1.accumulate(a, psi.w1);
            dual.w2.accumulate(a, psi.w2);
            dual.w3 += a * psi.w3;
        }
        pairs[j].lambda = s.eigenvalues[j];
        pairs[j].eigenfunction = std::move(primal[j]);
        pairs[j].adjoint_eigenfunction = std::move(dual);
        pairs[j].normalized = true;
    }
    return pairs;
}

Eigen::MatrixXcd gram_matrix(const std::vector<EigenPair>& pairs, int n,
                             const QuadratureRule& q) {
    if (n > static_cast<int>(pairs.size()))
        throw ContractViolation("gram_matrix: fewer pairs than requested order");
    Eigen::MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            G(i, j) = inner_product(pairs[i].eigenfunction, pairs[j].adjoint_eigenfunction, q);
    return G;
}

}  // namespace hyperbc
