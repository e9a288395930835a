#include "hyperbc/quadrature.hpp"

#include <cmath>

#include "hyperbc/types.hpp"

namespace hyperbc {

namespace {

constexpr int kPanelOrder = 32;

// Nodes/weights on [-1,1] by the Golub-Welsch method: eigen-decomposition of
// the symmetric tridiagonal Jacobi matrix with off-diagonal k/sqrt(4k^2-1).
void panel_rule(Eigen::VectorXd& x, Eigen::VectorXd& w) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(kPanelOrder, kPanelOrder);
    for (int k = 1; k < kPanelOrder; ++k) {
        double b = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = b;
        J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    x = es.eigenvalues();
    w.resize(kPanelOrder);
    for (int i = 0; i < kPanelOrder; ++i) {
        double v0 = es.eigenvectors()(0, i);
        w[i] = 2.0 * v0 * v0;
    }
}

}  // namespace

QuadratureRule QuadratureRule::gauss_legendre(int requested_nodes) {
    if (requested_nodes < 1) throw ConfigError("quadrature node count must be positive");
    int panels = (requested_nodes + kPanelOrder - 1) / kPanelOrder;
    Eigen::VectorXd x, w;
    panel_rule(x, w);

    QuadratureRule rule;
    rule.nodes.resize(panels * kPanelOrder);
    rule.weights.resize(panels * kPanelOrder);
    double h = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        for (int i = 0; i < kPanelOrder; ++i) {
            rule.nodes[p * kPanelOrder + i] = h * (p + 0.5 * (x[i] + 1.0));
            rule.weights[p * kPanelOrder + i] = 0.5 * h * w[i];
        }
    }
    return rule;
}

}  // namespace hyperbc
