#include "hyperbc/target.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hyperbc {

namespace {

std::vector<cplx> polynomial_roots(const std::vector<double>& kappa) {
    int N = static_cast<int>(kappa.size()) - 1;
    if (N == 0) return {};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(N, N);
    for (int i = 1; i < N; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < N; ++i) C(i, N - 1) = -kappa[i] / kappa[N];
    if (N > 1) C(N - 1, N - 2) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    std::vector<cplx> roots(N);
    for (int i = 0; i < N; ++i) roots[i] = es.eigenvalues()[i];
    sort_canonical(roots);
    return roots;
}

}  // namespace

TargetDynamics::TargetDynamics(std::vector<double> kappa_, double mu_, double tau_)
    : kappa(std::move(kappa_)), mu(mu_), tau(tau_) {
    if (kappa.empty()) throw ConfigError("target needs at least one kappa coefficient");
    if (kappa.back() == 0.0) throw ConfigError("leading kappa coefficient must be nonzero");
    if (!(tau > 0.0)) throw ConfigError("target needs tau > 0");
    if (!(mu > -1.0 && mu < 1.0) || mu == 0.0)
        throw ConfigError("target needs mu in (-1,1) excluding 0");
    for (cplx r : polynomial_roots(kappa)) {
        if (r.real() >= 0.0)
            throw ConfigError("target polynomial must be Hurwitz (root with Re >= 0 found)");
    }
    theta_minus = -tau;
    theta_plus = tau;
    N = static_cast<int>(kappa.size()) - 1;
}

std::vector<cplx> kappa_roots(const TargetDynamics& t) { return polynomial_roots(t.kappa); }

std::vector<cplx> desired_branch_points(const TargetDynamics& t, double im_max, int pad) {
    double re = std::log(std::abs(t.mu)) / (2.0 * t.tau);
    double spacing = std::numbers::pi / t.tau;
    std::vector<cplx> pts;
    if (t.mu > 0.0) {
        // e^{2 lambda tau} = -mu < 0: odd multiples of pi/(2 tau)
        auto im_at = [&](int i) { return (2.0 * i - 1.0) * 0.5 * spacing; };
        int i_max = 0;
        while (im_at(i_max + 1) <= im_max) ++i_max;
        for (int i = 1; i <= i_max + pad; ++i) {
            pts.emplace_back(re, im_at(i));
            pts.emplace_back(re, -im_at(i));
        }
    } else {
        // e^{2 lambda tau} = -mu > 0: even multiples, including the real point
        pts.emplace_back(re, 0.0);
        int i_max = static_cast<int>(std::floor(im_max / spacing + 1e-12));
        for (int i = 1; i <= i_max + pad; ++i) {
            pts.emplace_back(re, i * spacing);
            pts.emplace_back(re, -i * spacing);
        }
    }
    sort_modal(pts);
    return pts;
}

Spectrum desired_spectrum(const TargetDynamics& t, const Window& w, SpectrumLabel label) {
    Spectrum s;
    s.label = label;
    s.window = w;
    for (cplx r : kappa_roots(t))
        if (w.contains(r)) s.eigenvalues.push_back(r);
    for (cplx p : desired_branch_points(t, w.im_max))
        if (w.contains(p)) s.eigenvalues.push_back(p);
    assert_simple(s.eigenvalues, to_string(label).c_str());
    sort_canonical(s.eigenvalues);
    return s;
}

cplx desired_boundary_unbounded_coefficient(const TargetDynamics& t, const PlantParameters& p) {
    return p.beta * p.tau * (t.mu - 1.0) / (t.mu + 1.0);
}

AssumptionReport check_simplicity_and_gaps(const Spectrum& s) {
    AssumptionReport r;
    r.simple_ok = true;
    size_t n = s.eigenvalues.size();
    if (n <= 1) {
        r.min_gap = s.window.diameter();  // singleton convention
        r.details = "fewer than two eigenvalues in window; gap reported as window diameter";
        return r;
    }
    double min_gap = std::numeric_limits<double>::infinity();
    double scale_at_min = 1.0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double d = std::abs(s.eigenvalues[i] - s.eigenvalues[j]);
            if (d < min_gap) {
                min_gap = d;
                scale_at_min = std::max(1.0, std::abs(s.eigenvalues[i]));
            }
        }
    }
    r.min_gap = min_gap;
    if (min_gap < 1e-6 * scale_at_min) {
        r.simple_ok = false;
        std::ostringstream os;
        os << "eigenvalue gap " << min_gap << " below simplicity tolerance";
        r.details = os.str();
    }
    return r;
}

namespace {

// Windowed resolvent sum plus the closed-form bound on the dropped vertical
// lattice tail: sum_{k>=1} 1/(o + k d)^2 <= 1/(d o).
double resolvent_sum(cplx lam, const std::vector<cplx>& eigs, const std::vector<cplx>& b,
                     double b_sup, double d, double im_max) {
    double s = 0.0;
    for (size_t i = 0; i < eigs.size(); ++i) {
        double dist2 = std::norm(lam - eigs[i]);
        s += std::norm(b[i]) / dist2;
    }
    double edge = im_max + 0.5 * d;
    double o_up = std::abs(edge - lam.imag());
    double o_dn = std::abs(lam.imag() + edge);
    s += b_sup * b_sup * (1.0 / (d * o_up) + 1.0 / (d * o_dn));
    return s;
}

}  // namespace

AssumptionReport check_assumption_A2(const Spectrum& desired, const std::vector<double>& gaps,
                                     const std::vector<cplx>& b, const TargetDynamics& t,
                                     const Window& w, int samples_per_disk, int grid_samples) {
    size_t n = desired.eigenvalues.size();
    if (gaps.size() != n || b.size() != n)
        throw ContractViolation("check_assumption_A2 needs gaps and b aligned with the spectrum");

    AssumptionReport r = check_simplicity_and_gaps(desired);
    r.riesz_ok = true;     // mu != 0 and kappa_N != 0 hold by TargetDynamics construction
    r.discrete_ok = true;  // point spectrum with the closed-form lattice structure

    double b_sup = 0.0;
    for (cplx bi : b) b_sup = std::max(b_sup, std::abs(bi));
    double d = std::numbers::pi / t.tau;

    // constructive bound M = M_kappa + M_mu: the finitely many polynomial
    // eigenvalues contribute their disk-exterior bound 9 b_sup^2/d_i^2, the
    // lattice contributes 2 sum_i |b_sup/(d i/4)|^2 = 2 b_sup^2 (4/d)^2 pi^2/6.
    // A lattice point crowded below d/2 by a nearby polynomial root (possible
    // for mu < 0, whose branch has a real member) needs its own disk-exterior
    // term; the regularly spaced remainder is still covered by M_mu.
    double M_kappa = 0.0;
    auto kroots = kappa_roots(t);
    for (size_t i = 0; i < n; ++i) {
        bool special = gaps[i] < 0.5 * d;
        if (!special) {
            for (cplx kr : kroots) {
                if (std::abs(desired.eigenvalues[i] - kr) < 1e-8 * std::max(1.0, std::abs(kr))) {
                    special = true;
                    break;
                }
            }
        }
        if (special) M_kappa += 9.0 * b_sup * b_sup / (gaps[i] * gaps[i]);
    }
    double M_mu = 2.0 * b_sup * b_sup * (16.0 / (d * d)) * (std::numbers::pi * std::numbers::pi / 6.0);
    r.a2_bound_M = M_kappa + M_mu;

    double mx = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double radius = gaps[i] / 3.0;
        for (int k = 0; k < samples_per_disk; ++k) {
            double th = 2.0 * std::numbers::pi * k / samples_per_disk;
            cplx lam = desired.eigenvalues[i] + radius * std::exp(cplx{0.0, th});
            mx = std::max(mx, resolvent_sum(lam, desired.eigenvalues, b, b_sup, d, w.im_max));
        }
    }
    int n_re = std::max(2, grid_samples / 2);
    for (int a = 0; a < n_re; ++a) {
        double re = w.re_min + (0.0 - w.re_min) * a / (n_re - 1);
        for (int bidx = 0; bidx < grid_samples; ++bidx) {
            double im = -w.im_max + 2.0 * w.im_max * bidx / (grid_samples - 1);
            cplx lam{re, im};
            bool outside = true;
            for (size_t i = 0; i < n; ++i) {
                if (std::abs(lam - desired.eigenvalues[i]) < gaps[i] / 3.0) {
                    outside = false;
                    break;
                }
            }
            if (outside)
                mx = std::max(mx, resolvent_sum(lam, desired.eigenvalues, b, b_sup, d, w.im_max));
        }
    }
    r.a2_samples_max = mx;

    std::ostringstream os;
    if (!r.details.empty()) os << r.details << "; ";
    os << "A2 sampling: " << samples_per_disk << " per disk boundary, " << n_re << "x"
       << grid_samples << " grid, M_kappa = " << M_kappa << ", M_mu = " << M_mu;
    r.details = os.str();
    return r;
}

}  // namespace hyperbc
