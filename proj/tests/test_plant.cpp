#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "hyperbc/plant.hpp"

using namespace hyperbc;

namespace {
PlantParameters worked_plant() { return PlantParameters(11.0, 21.0, 31.0); }

const QuadratureRule& quad() {
    static QuadratureRule q = QuadratureRule::gauss_legendre(64);
    return q;
}
}  // namespace

TEST_CASE("derived transport constants of the worked plant") {
    PlantParameters p = worked_plant();
    CHECK(p.v == doctest::Approx(15.198684153570664).epsilon(1e-15));
    CHECK(p.tau == doctest::Approx(0.065795169495976899).epsilon(1e-15));
    CHECK(p.c() == doctest::Approx(42.832655341880958).epsilon(1e-15));
    CHECK_THROWS_AS(PlantParameters(-1.0, 21.0, 31.0), ConfigError);
    CHECK_THROWS_AS(PlantParameters(11.0, 21.0, 0.0), ConfigError);
}

TEST_CASE("lambda = 0 solves the open-loop characteristic equation") {
    PlantParameters p = worked_plant();
    BoundaryDynamics open{};
    CHECK(std::abs(characteristic_value(p, open, {0.0, 0.0})) < 1e-15);

    // finite difference cross-check of the derivative
    cplx l{-3.0, 17.0};
    double h = 1e-6;
    cplx fd = (characteristic_value(p, open, l + h) - characteristic_value(p, open, l - h)) /
              (2.0 * h);
    CHECK(std::abs(fd - characteristic_derivative(p, open, l)) < 1e-5);
}

TEST_CASE("open-loop spectrum sits on the imaginary axis at the known frequencies") {
    PlantParameters p = worked_plant();
    Spectrum s = find_spectrum(p, BoundaryDynamics{}, Window{-30.0, 100.0}, SpectrumLabel::OpenLoop);
    REQUIRE(s.eigenvalues.size() == 5);
    for (cplx l : s.eigenvalues) CHECK(std::abs(l.real()) < 1e-9);
    std::vector<double> ims;
    for (cplx l : s.eigenvalues) ims.push_back(l.imag());
    std::sort(ims.begin(), ims.end());
    CHECK(std::abs(ims[0] + 79.160279569714817) < 1e-9);
    CHECK(std::abs(ims[1] + 36.933118933361769) < 1e-9);
    CHECK(std::abs(ims[2]) < 1e-9);
    CHECK(std::abs(ims[3] - 36.933118933361769) < 1e-9);
    CHECK(std::abs(ims[4] - 79.160279569714817) < 1e-9);
}

TEST_CASE("intermediate spectrum matches the frozen reference") {
    PlantParameters p = worked_plant();
    BoundaryDynamics bd{{-0.79723821710458709, 0.0}};
    Spectrum s = find_spectrum(p, bd, Window{-30.0, 200.0}, SpectrumLabel::Intermediate);
    REQUIRE(s.eigenvalues.size() == 9);
    auto nearest = [&](cplx z) {
        double best = 1e300;
        for (cplx l : s.eigenvalues) best = std::min(best, std::abs(l - z));
        return best;
    };
    CHECK(nearest({-7.3616244127636659, 0.0}) < 1e-9);
    CHECK(nearest({-8.3118204759644296, -36.797490293190791}) < 1e-9);
    CHECK(nearest({-8.3118204759644296, 36.797490293190791}) < 1e-9);
    CHECK(nearest({-9.2604121231275727, -79.09821003892371}) < 1e-9);
    CHECK(nearest({-9.7950291687977202, -170.84080724237347}) < 1e-9);
    CHECK(nearest({-9.7950291687977202, 170.84080724237347}) < 1e-9);
}

TEST_CASE("eigenfunction is flat-normalized and satisfies the boundary relation") {
    PlantParameters p = worked_plant();
    cplx l{-7.3616244127636659, 0.0};
    StateFunction phi = eigenfunction(p, l);
    CHECK(std::abs(phi.w3 - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(phi.eval_w1(0.0) - phi.w3) < 1e-14);
    cplx rho{-0.79723821710458709, 0.0};
    CHECK(std::abs(phi.eval_w2(1.0) - rho * phi.eval_w1(1.0)) < 1e-9);
}

TEST_CASE("generator reproduces lambda phi on eigenfunctions") {
    PlantParameters p = worked_plant();
    cplx l{-8.3118204759644296, 36.797490293190791};
    StateFunction phi = eigenfunction(p, l);
    StateFunction g = apply_generator(p, phi);
    for (double z : {0.0, 0.3, 0.7, 1.0}) {
        CHECK(std::abs(g.eval_w1(z) - l * phi.eval_w1(z)) < 1e-8);
        CHECK(std::abs(g.eval_w2(z) - l * phi.eval_w2(z)) < 1e-8);
    }
    CHECK(std::abs(g.w3 - l * phi.w3) < 1e-8);
}

TEST_CASE("adjoint eigenfunction satisfies the conjugate eigenvalue equation") {
    PlantParameters p = worked_plant();
    BoundaryDynamics bd{{-0.79723821710458709, 0.0}};
    cplx l{-8.3118204759644296, 36.797490293190791};
    StateFunction psi = adjoint_eigenfunction(p, bd, std::conj(l));
    StateFunction g = apply_adjoint_generator(p, psi);
    cplx ls = std::conj(l);
    for (double z : {0.0, 0.5, 1.0}) {
        CHECK(std::abs(g.eval_w1(z) - ls * psi.eval_w1(z)) < 1e-7);
        CHECK(std::abs(g.eval_w2(z) - ls * psi.eval_w2(z)) < 1e-7);
    }
    CHECK(std::abs(g.w3 - ls * psi.w3) < 1e-7);

    // adjoint boundary relation alpha v1(0) = gamma v3
    CHECK(std::abs(p.alpha * psi.eval_w1(0.0) - p.gamma * psi.w3) < 1e-9);

    cplx wrong{1.0, 1.0};
    CHECK_THROWS_AS(adjoint_eigenfunction(p, bd, wrong), NumericalError);
}

TEST_CASE("generator and its adjoint are dual under the inner product") {
    PlantParameters p = worked_plant();
    BoundaryDynamics bd{{-0.79723821710458709, 0.0}};
    cplx la{-7.3616244127636659, 0.0};
    cplx lb{-8.3118204759644296, 36.797490293190791};
    StateFunction f = eigenfunction(p, la);
    StateFunction g = adjoint_eigenfunction(p, bd, std::conj(lb));
    cplx lhs = inner_product(apply_generator(p, f), g, quad());
    cplx rhs = inner_product(f, apply_adjoint_generator(p, g), quad());
    CHECK(std::abs(lhs - rhs) < 1e-8);
}
