#include <cmath>

#include "doctest.h"

#include "hyperbc/eigenbasis.hpp"

using namespace hyperbc;

namespace {
PlantParameters worked_plant() { return PlantParameters(11.0, 21.0, 31.0); }

TargetDynamics worked_target() {
    PlantParameters p = worked_plant();
    return TargetDynamics({12.0, 1.0}, std::exp(-20.0 * p.tau), p.tau);
}

const QuadratureRule& quad() {
    static QuadratureRule q = QuadratureRule::gauss_legendre(64);
    return q;
}
}  // namespace

TEST_CASE("intermediate basis is biorthonormal and modal-ordered") {
    PlantParameters p = worked_plant();
    TargetDynamics t = worked_target();
    BoundaryDynamics bd{desired_boundary_unbounded_coefficient(t, p)};
    Window w{-30.0, 200.0};
    auto basis = build_basis(p, bd, w, SpectrumLabel::Intermediate, quad());
    REQUIRE(basis.size() == 9);
    CHECK(basis[0].lambda.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(basis[0].lambda - cplx(-7.3616244127636659, 0.0)) < 1e-9);
    for (std::size_t i = 1; i < basis.size(); ++i)
        CHECK(std::abs(basis[i].lambda.imag()) >= std::abs(basis[i - 1].lambda.imag()) - 1e-12);

    int n = static_cast<int>(basis.size());
    Eigen::MatrixXcd G = gram_matrix(basis, n, quad());
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    CHECK((G - I).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("frozen modal input coefficients of the intermediate basis") {
    PlantParameters p = worked_plant();
    TargetDynamics t = worked_target();
    BoundaryDynamics bd{desired_boundary_unbounded_coefficient(t, p)};
    Window w{-30.0, 200.0};
    auto basis = build_basis(p, bd, w, SpectrumLabel::Intermediate, quad());
    REQUIRE(basis.size() >= 4);
    auto pair_at = [&](cplx lambda) -> const EigenPair& {
        const EigenPair* best = &basis[0];
        for (const auto& pr : basis)
            if (std::abs(pr.lambda - lambda) < std::abs(best->lambda - lambda)) best = &pr;
        REQUIRE(std::abs(best->lambda - lambda) < 1e-6);
        return *best;
    };
    cplx b0 = modal_input_coefficient(pair_at({-7.3616244127636659, 0.0}), p);
    cplx b1 = modal_input_coefficient(
        pair_at({-8.3118204759644296, -36.797490293190791}), p);
    cplx b3 = modal_input_coefficient(
        pair_at({-9.2604121231275727, -79.09821003892371}), p);
    CHECK(std::abs(b0 - cplx(10.011083940814702, 0.0)) < 1e-8);
    CHECK(std::abs(b1 - cplx(-8.4973716913831083, -0.54470671436815699)) < 1e-8);
    CHECK(std::abs(b3 - cplx(5.9099796869933527, 0.45685645471821607)) < 1e-8);

    // residue identity: b_i = 1/Delta'(lambda_i)
    for (std::size_t i : {0u, 1u, 3u}) {
        cplx der = characteristic_derivative(p, bd, basis[i].lambda);
        CHECK(std::abs(modal_input_coefficient(basis[i], p) - 1.0 / der) < 1e-8);
    }
}

TEST_CASE("desired dual basis is biorthonormal against the desired eigenfunctions") {
    PlantParameters p = worked_plant();
    TargetDynamics t = worked_target();
    BoundaryDynamics bd{desired_boundary_unbounded_coefficient(t, p)};
    Window w{-30.0, 200.0};
    auto intermediate = build_basis(p, bd, w, SpectrumLabel::Intermediate, quad());
    auto desired = build_desired_basis(p, t, w, SpectrumLabel::Desired, intermediate, quad());
    REQUIRE(desired.size() == 9);

    int n = static_cast<int>(desired.size());
    Eigen::MatrixXcd G = gram_matrix(desired, n, quad());
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    CHECK((G - I).cwiseAbs().maxCoeff() < 1e-8);

    // primal members are plant eigenfunctions at the desired eigenvalues
    CHECK(std::abs(desired[0].lambda - cplx(-12.0, 0.0)) < 1e-10);
    StateFunction phi = eigenfunction(p, desired[0].lambda);
    for (double z : {0.0, 0.5, 1.0})
        CHECK(std::abs(desired[0].eigenfunction.eval_w1(z) - phi.eval_w1(z)) < 1e-12);
}

TEST_CASE("modal weights reproduce expansion coefficients") {
    PlantParameters p = worked_plant();
    TargetDynamics t = worked_target();
    BoundaryDynamics bd{desired_boundary_unbounded_coefficient(t, p)};
    Window w{-30.0, 120.0};
    auto basis = build_basis(p, bd, w, SpectrumLabel::Intermediate, quad());
    REQUIRE(basis.size() >= 3);

    // x = 2 phi_0 + (1 - i) phi_2
    StateFunction x;
    x.w1.accumulate({2.0, 0.0}, basis[0].eigenfunction.w1);
    x.w1.accumulate({1.0, -1.0}, basis[2].eigenfunction.w1);
    x.w2.accumulate({2.0, 0.0}, basis[0].eigenfunction.w2);
    x.w2.accumulate({1.0, -1.0}, basis[2].eigenfunction.w2);
    x.w3 = 2.0 * basis[0].eigenfunction.w3 + cplx(1.0, -1.0) * basis[2].eigenfunction.w3;

    CHECK(std::abs(modal_weight(x, basis[0], quad()) - cplx(2.0, 0.0)) < 1e-8);
    CHECK(std::abs(modal_weight(x, basis[1], quad())) < 1e-8);
    CHECK(std::abs(modal_weight(x, basis[2], quad()) - cplx(1.0, -1.0)) < 1e-8);
}
