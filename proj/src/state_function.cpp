#include "hyperbc/state_function.hpp"

#include <cmath>

namespace hyperbc {

cplx ExpSum::operator()(double z) const {
    cplx s{0.0, 0.0};
    for (size_t k = 0; k < coef.size(); ++k) s += coef[k] * std::exp(rate[k] * z);
    return s;
}

void ExpSum::add_term(cplx c, cplx r) {
    if (c == cplx{0.0, 0.0}) return;
    for (size_t k = 0; k < rate.size(); ++k) {
        if (rate[k] == r) {
            coef[k] += c;
            return;
        }
    }
    coef.push_back(c);
    rate.push_back(r);
}

void ExpSum::accumulate(cplx a, const ExpSum& other) {
    for (size_t k = 0; k < other.coef.size(); ++k) add_term(a * other.coef[k], other.rate[k]);
}

ExpSum ExpSum::cosh_sinh(cplx a, cplx b, cplx r) {
    ExpSum s;
    s.add_term(0.5 * (a + b), r);
    s.add_term(0.5 * (a - b), -r);
    return s;
}

cplx StateFunction::eval_w1(double z) const {
    if (!sampled()) return w1(z);
    int m = static_cast<int>(w1_samples.size()) - 1;
    double x = z * m;
    int i = std::min(static_cast<int>(x), m - 1);
    double f = x - i;
    return (1.0 - f) * w1_samples[i] + f * w1_samples[i + 1];
}

cplx StateFunction::eval_w2(double z) const {
    if (!sampled()) return w2(z);
    int m = static_cast<int>(w2_samples.size()) - 1;
    double x = z * m;
    int i = std::min(static_cast<int>(x), m - 1);
    double f = x - i;
    return (1.0 - f) * w2_samples[i] + f * w2_samples[i + 1];
}

StateFunction StateFunction::analytic(ExpSum w1, ExpSum w2, cplx w3) {
    StateFunction s;
    s.w1 = std::move(w1);
    s.w2 = std::move(w2);
    s.w3 = w3;
    return s;
}

StateFunction StateFunction::from_samples(Eigen::VectorXcd w1, Eigen::VectorXcd w2, cplx w3) {
    if (w1.size() != w2.size() || w1.size() < 2)
        throw ContractViolation("sampled state needs matching grids of size >= 2");
    StateFunction s;
    s.w1_samples = std::move(w1);
    s.w2_samples = std::move(w2);
    s.w3 = w3;
    return s;
}

namespace {

cplx trapezoid_product(const StateFunction& f, const StateFunction& g) {
    int n = 0;
    if (f.sampled()) n = static_cast<int>(f.w1_samples.size());
    if (g.sampled()) {
        int ng = static_cast<int>(g.w1_samples.size());
        if (n != 0 && ng != n) throw ContractViolation("mismatched sampling grids");
        n = ng;
    }
    int m = n - 1;
    cplx s{0.0, 0.0};
    for (int i = 0; i <= m; ++i) {
        double z = static_cast<double>(i) / m;
        double w = (i == 0 || i == m) ? 0.5 / m : 1.0 / m;
        s += w * (f.eval_w1(z) * std::conj(g.eval_w1(z)) + f.eval_w2(z) * std::conj(g.eval_w2(z)));
    }
    return s + f.w3 * std::conj(g.w3);
}

}  // namespace

cplx inner_product(const StateFunction& f, const StateFunction& g, const QuadratureRule& q) {
    if (f.sampled() || g.sampled()) return trapezoid_product(f, g);
    cplx s{0.0, 0.0};
    for (int i = 0; i < q.size(); ++i) {
        double z = q.nodes[i];
        s += q.weights[i] *
             (f.w1(z) * std::conj(g.w1(z)) + f.w2(z) * std::conj(g.w2(z)));
    }
    return s + f.w3 * std::conj(g.w3);
}

ExpSum ExpSum::derivative() const {
    ExpSum d;
    for (std::size_t k = 0; k < coef.size(); ++k) d.add_term(coef[k] * rate[k], rate[k]);
    return d;
}

std::vector<EigenPair> biorthonormalize(std::vector<EigenPair> pairs, const QuadratureRule& q) {
    for (auto& pair : pairs) {
        cplx raw = inner_product(pair.eigenfunction, pair.adjoint_eigenfunction, q);
        if (std::abs(raw) < 1e-12)
            throw NumericalError("degenerate eigenpair: <phi, phi*> vanishes");
        // <phi, s*psi> = conj(s)<phi, psi> = 1
        cplx s = 1.0 / std::conj(raw);
        auto& a = pair.adjoint_eigenfunction;
        for (auto& c : a.w1.coef) c *= s;
        for (auto& c : a.w2.coef) c *= s;
        a.w3 *= s;
        pair.normalized = true;
    }
    return pairs;
}

cplx modal_weight(const StateFunction& x, const EigenPair& pair, const QuadratureRule& q) {
    if (!pair.normalized) throw ContractViolation("modal_weight requires a normalized pair");
    return inner_product(x, pair.adjoint_eigenfunction, q);
}

}  // namespace hyperbc
