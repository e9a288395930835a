#pragma once

#include "hyperbc/plant.hpp"
#include "hyperbc/types.hpp"

namespace hyperbc {

// Desired dynamics from the stable neutral delay ODE
//   sum_i kappa_i (chi^(i)(t+tau) + mu chi^(i)(t-tau)) = 0  (leading pair monic-free),
// i.e. a polynomial part with coefficients kappa_0..kappa_N plus a neutral
// coefficient mu on the delayed branch; the delay spread is 2*tau.
struct TargetDynamics {
    std::vector<double> kappa;  // kappa_0..kappa_N, kappa_N != 0
    double mu;
    double tau;
    double theta_minus;  // -tau
    double theta_plus;   // +tau
    int N;

    TargetDynamics(std::vector<double> kappa_, double mu_, double tau_);
};

struct AssumptionReport {
    bool riesz_ok = false;
    bool discrete_ok = false;
    bool simple_ok = false;
    double a2_bound_M = 0.0;
    double a2_samples_max = 0.0;
    double min_gap = 0.0;
    std::string details;

    bool a2_ok() const { return a2_samples_max <= a2_bound_M; }
};

// Roots of the kappa polynomial (companion-matrix eigenvalues).
std::vector<cplx> kappa_roots(const TargetDynamics& t);

// mu-branch lattice: Re = ln|mu|/(2 tau), Im spaced by pi/tau; the lattice
// sits on odd multiples of pi/(2 tau) for mu > 0 and even ones for mu < 0.
// Returns all branch points with |Im| <= im_max plus `pad` further points on
// each side (analytic continuation for gap computations).
std::vector<cplx> desired_branch_points(const TargetDynamics& t, double im_max, int pad = 0);

// Finite kappa roots united with the mu-branch lattice, intersected with w.
Spectrum desired_spectrum(const TargetDynamics& t, const Window& w, SpectrumLabel label);

// rho = beta*tau*(mu - 1)/(mu + 1): the boundary reflection realizing the
// neutral part of the target (controller and observer alike).
cplx desired_boundary_unbounded_coefficient(const TargetDynamics& t, const PlantParameters& p);

// Pairwise distinctness and minimum gap within the window (report fragment).
AssumptionReport check_simplicity_and_gaps(const Spectrum& s);

// Resolvent-sum bound: constructive M = M_kappa + M_mu against the sampled
// sup of sum |b_i/(lambda-lambda_i)|^2 outside the union D of gap/3 disks.
// gaps must come from gap_distances with analytic continuation.
AssumptionReport check_assumption_A2(const Spectrum& desired, const std::vector<double>& gaps,
                                     const std::vector<cplx>& b, const TargetDynamics& t,
                                     const Window& w, int samples_per_disk = 64,
                                     int grid_samples = 40);

}  // namespace hyperbc
