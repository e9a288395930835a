#pragma once

#include <Eigen/Dense>

#include "hyperbc/quadrature.hpp"
#include "hyperbc/types.hpp"

namespace hyperbc {

// Finite sum of complex exponentials sum_k coef[k]*exp(rate[k]*z). Closed-form
// eigenfunction components and their linear combinations all have this shape.
struct ExpSum {
    std::vector<cplx> coef;
    std::vector<cplx> rate;

    cplx operator()(double z) const;
    bool empty() const { return coef.empty(); }
    void add_term(cplx c, cplx r);
    // this += a * other
    void accumulate(cplx a, const ExpSum& other);
    ExpSum derivative() const;
    // a*cosh(r z) + b*sinh(r z)
    static ExpSum cosh_sinh(cplx a, cplx b, cplx r);
};

// Element of the state space L2(0,1;C^2) x C: two function components on
// z in [0,1] plus a scalar. Components are either closed-form exponential sums
// or samples on a uniform grid (simulation output); the two kinds don't mix
// inside one function.
struct StateFunction {
    ExpSum w1;
    ExpSum w2;
    Eigen::VectorXcd w1_samples;  // non-empty <=> sampled representation
    Eigen::VectorXcd w2_samples;
    cplx w3{0.0, 0.0};

    bool sampled() const { return w1_samples.size() > 0; }

    cplx eval_w1(double z) const;
    cplx eval_w2(double z) const;

    static StateFunction analytic(ExpSum w1, ExpSum w2, cplx w3);
    static StateFunction from_samples(Eigen::VectorXcd w1, Eigen::VectorXcd w2, cplx w3);
};

// Unweighted product on L2(0,1;C^2) x C with conjugation on the second
// argument. Analytic pairs integrate by Gauss-Legendre; as soon as a sampled
// representation is involved the integral is the trapezoid rule on that grid.
cplx inner_product(const StateFunction& f, const StateFunction& g, const QuadratureRule& q);

struct EigenPair {
    cplx lambda{0.0, 0.0};
    StateFunction eigenfunction;
    StateFunction adjoint_eigenfunction;
    bool normalized = false;
};

// Rescales each adjoint eigenfunction so <phi_i, phi_i*> = 1; eigenfunctions
// keep their flat-output normalization.
std::vector<EigenPair> biorthonormalize(std::vector<EigenPair> pairs, const QuadratureRule& q);

// p_i = <x, phi_i*>; requires a normalized pair.
cplx modal_weight(const StateFunction& x, const EigenPair& pair, const QuadratureRule& q);

}  // namespace hyperbc
