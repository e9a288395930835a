#pragma once

#include <optional>

#include "hyperbc/types.hpp"

namespace hyperbc {

// Disks D_i^eps = {|z - center_i| < eps*gap_i/3} around the desired spectrum.
struct DiskFamily {
    std::vector<cplx> centers;
    std::vector<double> gaps;
    double epsilon = 1.0;
    std::vector<double> radii;  // epsilon*gaps/3
};

struct ConvergenceReport {
    int n = 0;
    bool contained = false;
    bool one_per_disk = false;
    std::vector<cplx> unmatched;
    double max_re_closed_loop = 0.0;
    double hausdorff = 0.0;
};

// d_i = min_{j!=i} |lambda_i - lambda_j|. continuation holds off-window
// neighbors (the lattice part of every spectrum here is known in closed form)
// so window edges don't inflate gaps. A singleton without continuation is an
// error; a singleton with continuation uses it.
std::vector<double> gap_distances(const std::vector<cplx>& eigs,
                                  const std::vector<cplx>& continuation);

DiskFamily make_disks(const std::vector<cplx>& centers, const std::vector<double>& gaps,
                      double epsilon);

// max over j of sum_{i != j} |b_i/(lambda_j - lambda_i)|^2 plus the analytic
// off-window tail (vertical-lattice integral bound with spacing `lattice_gap`).
double verify_pairwise_bound(const std::vector<cplx>& b, const std::vector<cplx>& eigs,
                             double b_sup, double lattice_gap, double im_max);

// max of the same sum sampled on the D^eps disk boundaries and on a grid
// outside D^eps within the window; caller asserts <= M(4 + eps^-2).
double verify_eps_bound(const std::vector<cplx>& b, const std::vector<cplx>& eigs,
                        const DiskFamily& disks, const Window& w, int samples_per_disk,
                        int grid_samples, double b_sup, double lattice_gap);

// Theorem check: (a) every closed-loop eigenvalue lies in some disk;
// (b) every disk whose closure stays inside the window contains exactly one.
ConvergenceReport verify_theorem_conv(const Spectrum& closed, const DiskFamily& disks,
                                      const Window& w);

double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

struct SweepCriterion {
    enum Kind { TheoremDisks, StabilityMargin } kind = TheoremDisks;
    double margin = 0.0;  // pass when max_re <= margin (StabilityMargin)

    bool passes(const ConvergenceReport& r) const {
        return kind == TheoremDisks ? (r.contained && r.one_per_disk)
                                    : (r.max_re_closed_loop <= margin);
    }
};

// Smallest n whose whole suffix up to n_max passes (the guarantee is for all
// orders above a threshold, not monotone below it). first_pass is the plain
// first passing n, reported for transparency.
struct MinimalOrderResult {
    std::optional<int> n_eps;
    std::optional<int> first_pass;
};

MinimalOrderResult minimal_order(const std::vector<ConvergenceReport>& sweep,
                                 const SweepCriterion& crit);

}  // namespace hyperbc
