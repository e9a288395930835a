#include "hyperbc/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <numbers>

namespace hyperbc {

namespace {

// Search geometry ran into a zero or pole touching a rectangle edge; the
// caller retries with a jittered cover.
struct BoundaryHit {};

struct Rect {
    double re0, re1, im0, im1;

    double width() const { return re1 - re0; }
    double height() const { return im1 - im0; }
    cplx center() const { return {0.5 * (re0 + re1), 0.5 * (im0 + im1)}; }

    bool contains_closed(cplx z, double slack = 0.0) const {
        return z.real() >= re0 - slack && z.real() <= re1 + slack && z.imag() >= im0 - slack &&
               z.imag() <= im1 + slack;
    }
    bool contains_open(cplx z, double slack) const {
        return z.real() > re0 + slack && z.real() < re1 - slack && z.imag() > im0 + slack &&
               z.imag() < im1 - slack;
    }
};

cplx eval_checked(const MeromorphicFn& fn, cplx z) {
    cplx v = fn.f(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw BoundaryHit{};
    return v;
}

// Phase-unwrapped boundary integral of d(arg f)/2pi. Consecutive samples are
// refined until each phase step is < 2 rad, so the unwrapping is unambiguous.
double edge_phase(const MeromorphicFn& fn, cplx a, cplx b, int base) {
    struct Node {
        double t;
        cplx f;
    };
    std::list<Node> nodes;
    for (int i = 0; i <= base; ++i) {
        double t = static_cast<double>(i) / base;
        cplx z = a + (b - a) * t;
        cplx v = eval_checked(fn, z);
        if (std::abs(v) < 1e-11 * (1.0 + std::abs(z))) throw BoundaryHit{};
        nodes.push_back({t, v});
    }
    double total = 0.0;
    auto it = nodes.begin();
    while (std::next(it) != nodes.end()) {
        auto nx = std::next(it);
        double d = std::arg(nx->f / it->f);
        if (std::abs(d) > 2.0) {
            double tm = 0.5 * (it->t + nx->t);
            if (nx->t - it->t < 1e-10) throw BoundaryHit{};
            cplx z = a + (b - a) * tm;
            cplx v = eval_checked(fn, z);
            if (std::abs(v) < 1e-11 * (1.0 + std::abs(z))) throw BoundaryHit{};
            nodes.insert(nx, {tm, v});
            continue;
        }
        total += d;
        ++it;
    }
    return total;
}

double winding_certified(const MeromorphicFn& fn, const Rect& r, int& count_out) {
    cplx c00{r.re0, r.im0}, c10{r.re1, r.im0}, c11{r.re1, r.im1}, c01{r.re0, r.im1};
    for (int base : {64, 128, 256}) {
        double total = edge_phase(fn, c00, c10, base) + edge_phase(fn, c10, c11, base) +
                       edge_phase(fn, c11, c01, base) + edge_phase(fn, c01, c00, base);
        double w = total / (2.0 * std::numbers::pi);
        double rounded = std::round(w);
        if (std::abs(w - rounded) < 0.15) {
            count_out = static_cast<int>(rounded);
            return w;
        }
    }
    throw BoundaryHit{};
}

int zeros_inside(const MeromorphicFn& fn, const Rect& r) {
    double edge_clearance = 1e-9 * std::max({1.0, r.width(), r.height()});
    int poles_in = 0;
    for (cplx p : fn.poles) {
        if (!r.contains_closed(p, edge_clearance)) continue;
        if (!r.contains_open(p, edge_clearance)) throw BoundaryHit{};
        ++poles_in;
    }
    int w = 0;
    winding_certified(fn, r, w);
    return w + poles_in;  // argument principle: winding = zeros - poles
}

cplx nearest_pole(const MeromorphicFn& fn, cplx z, double* dist) {
    cplx best{0.0, 0.0};
    double d = std::numeric_limits<double>::infinity();
    for (cplx p : fn.poles) {
        double dp = std::abs(z - p);
        if (dp < d) {
            d = dp;
            best = p;
        }
    }
    *dist = d;
    return best;
}

cplx newton_refine(const MeromorphicFn& fn, cplx z0, const RootSearchOptions& opt) {
    double pd = 0.0;
    cplx pole = nearest_pole(fn, z0, &pd);
    bool pole_mode = std::isfinite(pd) && pd < 0.05 * std::max(1.0, std::abs(z0));

    cplx z = z0;
    for (int it = 0; it < 100; ++it) {
        cplx f = fn.f(z), df = fn.df(z);
        cplx step;
        if (pole_mode) {
            // refine h = (z - p) f, which is analytic across the pole
            cplx h = (z - pole) * f;
            cplx dh = f + (z - pole) * df;
            step = h / dh;
        } else {
            step = f / df;
        }
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        z -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }

    double cond = 1.0;
    if (!fn.poles.empty()) {
        double d = 0.0;
        nearest_pole(fn, z, &d);
        cond = std::max(1.0, 1.0 / d);
    }
    if (std::abs(fn.f(z)) > opt.residual_tol * cond)
        throw NumericalError("root refinement residual above tolerance");
    return z;
}

void subdivide(const MeromorphicFn& fn, const Rect& r, const RootSearchOptions& opt, double jit,
               int depth, std::vector<cplx>& out) {
    int z_count = zeros_inside(fn, r);
    if (z_count == 0) return;

    double size = std::max(r.width(), r.height());
    double scale = std::max(1.0, std::abs(r.center()));
    if (z_count == 1 && size < 0.5) {
        cplx z = newton_refine(fn, r.center(), opt);
        if (r.contains_closed(z, 0.5 * size)) {
            out.push_back(z);
            return;
        }
        // converged into a neighboring basin; isolate further below
    }
    if (size < opt.cluster_tol * scale) {
        if (z_count >= 2)
            throw AssumptionError("eigenvalue cluster below simplicity tolerance in root search");
        throw NumericalError("root refinement kept escaping its isolation box");
    }
    if (depth > opt.max_depth) throw NumericalError("root search exceeded subdivision depth");

    bool split_re = r.width() > r.height();
    double lo = split_re ? r.re0 : r.im0;
    double hi = split_re ? r.re1 : r.im1;
    double cut = 0.5 * (lo + hi) + jit * (hi - lo);
    // keep poles clear of the new edge
    for (int tries = 0; tries < 50; ++tries) {
        bool clear = true;
        for (cplx p : fn.poles) {
            double coord = split_re ? p.real() : p.imag();
            if (std::abs(coord - cut) < 1e-6 * (hi - lo)) {
                clear = false;
                break;
            }
        }
        if (clear) break;
        cut += 0.013 * (hi - lo);
    }
    Rect ra = r, rb = r;
    if (split_re) {
        ra.re1 = cut;
        rb.re0 = cut;
    } else {
        ra.im1 = cut;
        rb.im0 = cut;
    }
    subdivide(fn, ra, opt, jit, depth + 1, out);
    subdivide(fn, rb, opt, jit, depth + 1, out);
}

}  // namespace

std::vector<cplx> find_zeros_rect(const MeromorphicFn& fn, double re0, double re1, double im0,
                                  double im1, const RootSearchOptions& opt) {
    if (!(re0 < re1 && im0 < im1)) throw ContractViolation("empty search rectangle");
    Rect want{re0, re1, im0, im1};
    double unit = std::max(want.width(), want.height()) / 64.0;

    for (int attempt = 0; attempt <= opt.boundary_retries; ++attempt) {
        double pad = attempt * 0.0137 * unit;
        Rect search{re0 - pad, re1 + pad, im0 - pad, im1 + pad};
        double jit = 0.001 + 0.0137 * attempt;
        try {
            std::vector<cplx> zeros;
            subdivide(fn, search, opt, jit, 0, zeros);

            std::vector<cplx> inside;
            for (cplx z : zeros)
                if (want.contains_closed(z, 1e-12 * std::max(1.0, std::abs(z)))) inside.push_back(z);

            sort_canonical(inside);
            for (size_t i = 0; i + 1 < inside.size(); ++i) {
                double sc = std::max(1.0, std::abs(inside[i]));
                if (std::abs(inside[i] - inside[i + 1]) < opt.cluster_tol * sc)
                    throw AssumptionError("root search found a cluster: simplicity violation");
            }
            return inside;
        } catch (const BoundaryHit&) {
            continue;
        }
    }
    throw NumericalError("root count could not be certified after boundary retries");
}

}  // namespace hyperbc
