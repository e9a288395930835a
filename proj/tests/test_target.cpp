#include <cmath>
#include <numbers>

#include "doctest.h"

#include "hyperbc/convergence.hpp"
#include "hyperbc/target.hpp"

using namespace hyperbc;

namespace {
PlantParameters worked_plant() { return PlantParameters(11.0, 21.0, 31.0); }

TargetDynamics worked_target() {
    PlantParameters p = worked_plant();
    return TargetDynamics({12.0, 1.0}, std::exp(-20.0 * p.tau), p.tau);
}
}  // namespace

TEST_CASE("polynomial roots of the worked target") {
    TargetDynamics t = worked_target();
    CHECK(t.N == 1);
    auto roots = kappa_roots(t);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - cplx(-12.0, 0.0)) < 1e-12);
}

TEST_CASE("branch lattice for a positive neutral coefficient sits on odd half-lattice points") {
    // mu = 0.5, tau = 0.5: Re = ln(0.5), Im odd multiples of pi
    TargetDynamics t({1.0, 1.0}, 0.5, 0.5);
    auto pts = desired_branch_points(t, 10.0);
    const double pi = std::numbers::pi;
    double re = std::log(0.5);
    REQUIRE(pts.size() == 4);
    sort_canonical(pts);
    CHECK(std::abs(pts[0] - cplx(re, -3 * pi)) < 1e-12);
    CHECK(std::abs(pts[1] - cplx(re, -pi)) < 1e-12);
    CHECK(std::abs(pts[2] - cplx(re, pi)) < 1e-12);
    CHECK(std::abs(pts[3] - cplx(re, 3 * pi)) < 1e-12);
}

TEST_CASE("worked desired spectrum has the frozen lattice") {
    PlantParameters p = worked_plant();
    TargetDynamics t = worked_target();
    Spectrum s = desired_spectrum(t, Window{-30.0, 200.0}, SpectrumLabel::Desired);
    std::vector<cplx> modal = s.eigenvalues;
    sort_modal(modal);
    REQUIRE(modal.size() == 9);
    CHECK(std::abs(modal[0] - cplx(-12.0, 0.0)) < 1e-12);
    for (std::size_t i = 1; i < modal.size(); ++i)
        CHECK(std::abs(modal[i].real() + 10.0) < 1e-10);
    CHECK(std::abs(modal[1].imag() + 23.874037240544599) < 1e-9);
    CHECK(std::abs(modal[3].imag() + 71.6221117216338) < 1e-9);
    CHECK(std::abs(modal[5].imag() + 119.370186202723) < 1e-9);
    // spacing pi/tau within the branch
    CHECK(std::abs((modal[3].imag() - modal[1].imag()) + std::numbers::pi / p.tau) < 1e-9);
}

TEST_CASE("unbounded boundary coefficient matches the frozen value") {
    PlantParameters p = worked_plant();
    TargetDynamics t = worked_target();
    cplx rho = desired_boundary_unbounded_coefficient(t, p);
    CHECK(std::abs(rho - cplx(-0.79723821710458709, 0.0)) < 1e-14);
    // dead-beat (mu -> 0+) would give rho = -beta*tau; the family stays away from it
    CHECK(std::abs(rho + p.beta * p.tau) > 0.1);
}

TEST_CASE("target construction rejects degenerate data") {
    CHECK_THROWS_AS(TargetDynamics({12.0, 0.0}, 0.5, 0.5), ConfigError);
    CHECK_THROWS_AS(TargetDynamics({}, 0.5, 0.5), ConfigError);
    CHECK_THROWS_AS(TargetDynamics({12.0, 1.0}, 0.0, 0.5), ConfigError);
    CHECK_THROWS_AS(TargetDynamics({12.0, 1.0}, 1.0, 0.5), ConfigError);
}

TEST_CASE("simplicity check reports the minimum gap") {
    Spectrum s;
    s.eigenvalues = {{-12.0, 0.0}, {-10.0, 23.874037240544599}, {-10.0, -23.874037240544599}};
    AssumptionReport r = check_simplicity_and_gaps(s);
    CHECK(r.simple_ok);
    double expect = std::abs(cplx(-12.0, 0.0) - cplx(-10.0, 23.874037240544599));
    CHECK(r.min_gap == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("resolvent bound assumption holds on the worked desired spectrum") {
    PlantParameters p = worked_plant();
    TargetDynamics t = worked_target();
    Window w{-30.0, 200.0};
    Spectrum s = desired_spectrum(t, w, SpectrumLabel::Desired);
    auto cont = desired_branch_points(t, w.im_max + 4.0 * std::numbers::pi / t.tau);
    std::vector<cplx> off_window;
    for (cplx z : cont)
        if (!w.contains(z)) off_window.push_back(z);
    auto gaps = gap_distances(s.eigenvalues, off_window);

    std::vector<cplx> b(s.eigenvalues.size(), cplx{1.0, 0.0});
    AssumptionReport r = check_assumption_A2(s, gaps, b, t, w, 32, 20);
    CHECK(r.riesz_ok);
    CHECK(r.discrete_ok);
    CHECK(r.a2_bound_M > 0.0);
    CHECK(r.a2_ok());
}
