#include "hyperbc/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hyperbc {

std::vector<double> gap_distances(const std::vector<cplx>& eigs,
                                  const std::vector<cplx>& continuation) {
    if (eigs.size() == 1 && continuation.empty())
        throw ContractViolation("gap of a singleton spectrum needs analytic continuation");
    std::vector<double> gaps(eigs.size());
    for (std::size_t j = 0; j < eigs.size(); ++j) {
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < eigs.size(); ++i)
            if (i != j) d = std::min(d, std::abs(eigs[j] - eigs[i]));
        for (const cplx& c : continuation) d = std::min(d, std::abs(eigs[j] - c));
        gaps[j] = d;
    }
    return gaps;
}

DiskFamily make_disks(const std::vector<cplx>& centers, const std::vector<double>& gaps,
                      double epsilon) {
    if (centers.size() != gaps.size())
        throw ContractViolation("disk centers and gaps differ in length");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw ConfigError("epsilon must lie in (0, 1]");
    DiskFamily d;
    d.centers = centers;
    d.gaps = gaps;
    d.epsilon = epsilon;
    d.radii.reserve(gaps.size());
    for (double g : gaps) d.radii.push_back(epsilon * g / 3.0);
    return d;
}

namespace {

// Off-window part of the resolvent-square sum for a vertical lattice with
// spacing d starting half a step beyond the window edge.
double lattice_tail(cplx z, double b_sup, double d, double im_max) {
    if (b_sup == 0.0) return 0.0;
    double edge = im_max + d / 2.0;
    double o_up = std::abs(edge - z.imag());
    double o_dn = std::abs(z.imag() + edge);
    return b_sup * b_sup * (1.0 / (d * o_up) + 1.0 / (d * o_dn));
}

double resolvent_square_sum(cplx z, const std::vector<cplx>& b, const std::vector<cplx>& eigs,
                            double b_sup, double d, double im_max) {
    double s = 0.0;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        double dist2 = std::norm(z - eigs[i]);
        s += std::norm(b[i]) / dist2;
    }
    return s + lattice_tail(z, b_sup, d, im_max);
}

}  // namespace

double verify_pairwise_bound(const std::vector<cplx>& b, const std::vector<cplx>& eigs,
                             double b_sup, double lattice_gap, double im_max) {
    if (b.size() != eigs.size()) throw ContractViolation("coefficients and eigenvalues differ in length");
    double worst = 0.0;
    for (std::size_t j = 0; j < eigs.size(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < eigs.size(); ++i)
            if (i != j) s += std::norm(b[i]) / std::norm(eigs[j] - eigs[i]);
        s += lattice_tail(eigs[j], b_sup, lattice_gap, im_max);
        worst = std::max(worst, s);
    }
    return worst;
}

double verify_eps_bound(const std::vector<cplx>& b, const std::vector<cplx>& eigs,
                        const DiskFamily& disks, const Window& w, int samples_per_disk,
                        int grid_samples, double b_sup, double lattice_gap) {
    if (b.size() != eigs.size()) throw ContractViolation("coefficients and eigenvalues differ in length");
    double worst = 0.0;
    for (std::size_t k = 0; k < disks.centers.size(); ++k) {
        for (int s = 0; s < samples_per_disk; ++s) {
            double t = 2.0 * std::numbers::pi * s / samples_per_disk;
            cplx z = disks.centers[k] + disks.radii[k] * cplx{std::cos(t), std::sin(t)};
            worst = std::max(worst, resolvent_square_sum(z, b, eigs, b_sup, lattice_gap, w.im_max));
        }
    }
    int n_re = std::max(2, grid_samples / 2);
    for (int a = 0; a < n_re; ++a) {
        double re = w.re_min + (0.0 - w.re_min) * a / (n_re - 1);
        for (int bb = 0; bb < grid_samples; ++bb) {
            double im = -w.im_max + 2.0 * w.im_max * bb / (grid_samples - 1);
            cplx z{re, im};
            bool inside = false;
            for (std::size_t k = 0; k < disks.centers.size() && !inside; ++k)
                inside = std::abs(z - disks.centers[k]) < disks.radii[k];
            if (inside) continue;
            worst = std::max(worst, resolvent_square_sum(z, b, eigs, b_sup, lattice_gap, w.im_max));
        }
    }
    return worst;
}

ConvergenceReport verify_theorem_conv(const Spectrum& closed, const DiskFamily& disks,
                                      const Window& w) {
    ConvergenceReport r;
    r.contained = true;
    r.one_per_disk = true;
    r.max_re_closed_loop = -std::numeric_limits<double>::infinity();

    std::vector<int> counts(disks.centers.size(), 0);
    for (const cplx& z : closed.eigenvalues) {
        bool in_some = false;
        for (std::size_t k = 0; k < disks.centers.size(); ++k) {
            double slack = 1e-12 * std::max(1.0, std::abs(disks.centers[k]));
            if (std::abs(z - disks.centers[k]) <= disks.radii[k] + slack) {
                in_some = true;
                ++counts[k];
            }
        }
        if (!in_some) {
            r.contained = false;
            r.unmatched.push_back(z);
        }
        r.max_re_closed_loop = std::max(r.max_re_closed_loop, z.real());
    }
    for (std::size_t k = 0; k < disks.centers.size(); ++k) {
        const cplx& c = disks.centers[k];
        bool closure_in_window = c.real() - disks.radii[k] >= w.re_min &&
                                 std::abs(c.imag()) + disks.radii[k] <= w.im_max;
        if (closure_in_window && counts[k] != 1) r.one_per_disk = false;
    }
    r.hausdorff = hausdorff_distance(closed.eigenvalues, disks.centers);
    return r;
}

double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    auto directed = [](const std::vector<cplx>& s, const std::vector<cplx>& t) {
        double worst = 0.0;
        for (const cplx& z : s) {
            double best = std::numeric_limits<double>::infinity();
            for (const cplx& y : t) best = std::min(best, std::abs(z - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

MinimalOrderResult minimal_order(const std::vector<ConvergenceReport>& sweep,
                                 const SweepCriterion& crit) {
    MinimalOrderResult res;
    for (auto it = sweep.rbegin(); it != sweep.rend(); ++it) {
        if (!crit.passes(*it)) break;
        res.n_eps = it->n;
    }
    for (const auto& r : sweep)
        if (crit.passes(r)) {
            res.first_pass = r.n;
            break;
        }
    return res;
}

}  // namespace hyperbc
