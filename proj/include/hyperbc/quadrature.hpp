#pragma once

#include <Eigen/Dense>

namespace hyperbc {

// Composite Gauss-Legendre rule on [0,1]: panels of order 32, panel count
// chosen so the total node count is at least the requested one. Integrands
// here are entire (products of exponentials), so this converges spectrally.
struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;

    int size() const { return static_cast<int>(nodes.size()); }

    static QuadratureRule gauss_legendre(int requested_nodes);
};

}  // namespace hyperbc
