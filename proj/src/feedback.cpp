#include "hyperbc/feedback.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hyperbc/rootfind.hpp"

namespace hyperbc {

std::string to_string(BasisChoice b) {
    switch (b) {
        case BasisChoice::OpenLoop: return "OpenLoop";
        case BasisChoice::Intermediate: return "Intermediate";
        case BasisChoice::Desired: return "Desired";
    }
    throw ContractViolation("unknown basis choice");
}

BasisChoice basis_from_string(const std::string& s) {
    if (s == "OpenLoop") return BasisChoice::OpenLoop;
    if (s == "Intermediate") return BasisChoice::Intermediate;
    if (s == "Desired") return BasisChoice::Desired;
    throw ConfigError("unknown basis '" + s + "'");
}

BoundedKernel build_bounded_kernel(const PlantParameters& p, const TargetDynamics& t) {
    if (t.N != 1)
        throw ContractViolation("bounded kernel is defined for first-order flat dynamics");
    cplx kappa0 = t.kappa[0] / t.kappa[1];
    double c = p.c();
    cplx denom = p.gamma * (t.mu + 1.0);
    BoundedKernel kern;
    kern.c_plus = (c - kappa0) / denom;
    kern.c_minus = -t.mu * (c + kappa0) / denom;
    return kern;
}

cplx modal_gain(const EigenPair& pair, const BoundedKernel& kern, const TargetDynamics& t) {
    cplx lt = pair.lambda * t.tau;
    return pair.eigenfunction.w3 * (kern.c_plus * std::exp(lt) + kern.c_minus * std::exp(-lt));
}

FeedbackApproximation make_feedback(cplx rho, int n, BasisChoice basis,
                                    const std::vector<EigenPair>& basis_pairs,
                                    const BoundedKernel& kern, const TargetDynamics& t) {
    if (n < 0) throw ContractViolation("negative approximation order");
    if (static_cast<std::size_t>(n) > basis_pairs.size())
        throw ContractViolation("basis window smaller than the approximation order");
    FeedbackApproximation fb;
    fb.rho = rho;
    fb.n = n;
    fb.basis = basis;
    fb.pairs.assign(basis_pairs.begin(), basis_pairs.begin() + n);
    fb.gains.reserve(n);
    for (const auto& pair : fb.pairs) fb.gains.push_back(modal_gain(pair, kern, t));
    // the truncated control law must stay real-valued: a conjugate-pair member
    // whose partner falls outside the truncation carries no gain
    if (n >= 1) {
        const cplx last = fb.pairs.back().lambda;
        if (std::abs(last.imag()) > 1e-9 * std::max(1.0, std::abs(last))) {
            bool paired = false;
            for (int i = 0; i + 1 < n; ++i)
                if (std::abs(fb.pairs[i].lambda - std::conj(last)) <=
                    1e-6 * std::max(1.0, std::abs(last))) {
                    paired = true;
                    break;
                }
            if (!paired) fb.gains.back() = cplx{0.0, 0.0};
        }
    }
    return fb;
}

Eigen::VectorXcd intermediate_coordinate_gains(const FeedbackApproximation& fb,
                                               const std::vector<EigenPair>& basis_window,
                                               const std::vector<EigenPair>& intermediate,
                                               const QuadratureRule& q) {
    const int K = static_cast<int>(std::min(basis_window.size(), intermediate.size()));
    if (fb.n > K) throw ContractViolation("reference window smaller than the approximation order");
    Eigen::VectorXcd m = Eigen::VectorXcd::Zero(K);
    if (fb.basis == BasisChoice::Intermediate) {
        for (int i = 0; i < fb.n; ++i) m(i) = fb.gains[i];
        return m;
    }
    Eigen::MatrixXcd G(K, K);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            G(i, j) = inner_product(basis_window[i].eigenfunction,
                                    intermediate[j].adjoint_eigenfunction, q);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(K);
    for (int i = 0; i < fb.n; ++i) rhs(i) = fb.gains[i];
    m = G.partialPivLu().solve(rhs);
    return m;
}

namespace {

// (A)_{j,i} = <A phi_i, psi_j> over the first rows x cols pairs of a basis.
Eigen::MatrixXcd projected_generator(const PlantParameters& p, const std::vector<EigenPair>& pairs,
                                     int n, const QuadratureRule& q) {
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i) {
        StateFunction Aphi = apply_generator(p, pairs[i].eigenfunction);
        for (int j = 0; j < n; ++j)
            A(j, i) = inner_product(Aphi, pairs[j].adjoint_eigenfunction, q);
    }
    return A;
}

}  // namespace

ReducedModel assemble_reduced(const PlantParameters& p, const FeedbackApproximation& fb,
                              const std::vector<EigenPair>& basis_window,
                              const std::vector<EigenPair>& intermediate,
                              const QuadratureRule& q) {
    ReducedModel rm;
    if (fb.basis == BasisChoice::Intermediate) {
        rm.truncation = fb.n;
        rm.A_n = projected_generator(p, intermediate, fb.n, q);
        rm.B_n.resize(fb.n);
        rm.K_n.resize(fb.n);
        for (int i = 0; i < fb.n; ++i) {
            rm.B_n(i) = modal_input_coefficient(intermediate[i], p);
            rm.K_n(i) = fb.gains[i];
        }
        return rm;
    }
    rm.K_n = intermediate_coordinate_gains(fb, basis_window, intermediate, q);
    rm.truncation = static_cast<int>(rm.K_n.size());
    rm.A_n = projected_generator(p, intermediate, rm.truncation, q);
    rm.B_n.resize(rm.truncation);
    for (int i = 0; i < rm.truncation; ++i)
        rm.B_n(i) = modal_input_coefficient(intermediate[i], p);
    return rm;
}

namespace {

bool all_zero(const std::vector<cplx>& v) {
    return std::all_of(v.begin(), v.end(), [](cplx c) { return c == cplx{0.0, 0.0}; });
}

}  // namespace

Spectrum closed_loop_spectrum_matrix(const ReducedModel& rm, const FeedbackApproximation& fb,
                                     const Spectrum& intermediate, const Window& w) {
    if (fb.basis != BasisChoice::Intermediate)
        throw ContractViolation("matrix form of the closed-loop spectrum needs the intermediate basis");
    if (fb.n == 0 || all_zero(fb.gains)) return intermediate;

    Eigen::MatrixXcd M = rm.A_n + rm.B_n * rm.K_n.transpose();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success)
        throw NumericalError("eigenvalue iteration failed on the reduced closed-loop matrix");

    Spectrum s;
    s.label = SpectrumLabel::ClosedLoop;
    s.window = w;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (w.contains(es.eigenvalues()(i))) s.eigenvalues.push_back(es.eigenvalues()(i));
    // residual tail by value: the basis list and the windowed spectrum may
    // break conjugate-pair ties differently, so index-based dropping is unsafe
    for (cplx lam : intermediate.eigenvalues) {
        bool kept = false;
        for (const auto& pair : fb.pairs)
            if (std::abs(lam - pair.lambda) <= 1e-9 * std::max(1.0, std::abs(lam))) {
                kept = true;
                break;
            }
        if (!kept) s.eigenvalues.push_back(lam);
    }
    assert_simple(s.eigenvalues, "closed-loop spectrum");
    sort_canonical(s.eigenvalues);
    return s;
}

namespace {

// Coefficients below roundoff of the gain scale leave the mode unperturbed.
void snap_negligible(std::vector<cplx>& m) {
    double scale = 0.0;
    for (cplx c : m) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return;
    for (cplx& c : m)
        if (std::abs(c) < 1e-12 * scale) c = cplx{0.0, 0.0};
}

double tail_scale(const CharacteristicReference& ref, double lattice_gap) {
    double last = 0.0;
    std::size_t K = ref.lambdas.size();
    for (std::size_t i = K >= 3 ? K - 3 : 0; i < K; ++i)
        last = std::max(last, std::abs(ref.m[i] * ref.b[i]));
    return 2.0 * last / lattice_gap;
}

}  // namespace

CharacteristicReference make_intermediate_reference(const FeedbackApproximation& fb,
                                                    const std::vector<EigenPair>& basis_window,
                                                    const std::vector<EigenPair>& intermediate,
                                                    const Spectrum& intermediate_sp,
                                                    const PlantParameters& p,
                                                    const QuadratureRule& q) {
    CharacteristicReference ref;
    ref.reference = intermediate_sp;
    Eigen::VectorXcd m = intermediate_coordinate_gains(fb, basis_window, intermediate, q);
    const int K = static_cast<int>(m.size());
    ref.lambdas.reserve(K);
    ref.m.assign(m.data(), m.data() + K);
    ref.b.reserve(K);
    for (int i = 0; i < K; ++i) {
        ref.lambdas.push_back(intermediate[i].lambda);
        ref.b.push_back(modal_input_coefficient(intermediate[i], p));
    }
    if (fb.basis != BasisChoice::Intermediate) snap_negligible(ref.m);
    ref.tail_bound = fb.basis == BasisChoice::Intermediate
                         ? 0.0
                         : tail_scale(ref, std::numbers::pi / p.tau);
    return ref;
}

CharacteristicReference make_desired_reference(const FeedbackApproximation& fb,
                                               const std::vector<EigenPair>& desired,
                                               const Spectrum& desired_sp,
                                               const BoundedKernel& kern, const TargetDynamics& t,
                                               const PlantParameters& p, const QuadratureRule& q) {
    CharacteristicReference ref;
    ref.reference = desired_sp;
    const int K = static_cast<int>(desired.size());
    ref.lambdas.reserve(K);
    ref.m.reserve(K);
    ref.b.reserve(K);
    for (int i = 0; i < K; ++i) {
        const auto& d = desired[i];
        cplx applied = 0.0;
        for (int j = 0; j < fb.n; ++j)
            applied += inner_product(d.eigenfunction, fb.pairs[j].adjoint_eigenfunction, q) *
                       fb.gains[j];
        ref.lambdas.push_back(d.lambda);
        ref.m.push_back(applied - modal_gain(d, kern, t));
        ref.b.push_back(modal_input_coefficient(d, p));
    }
    snap_negligible(ref.m);
    ref.tail_bound = tail_scale(ref, std::numbers::pi / t.tau);
    return ref;
}

cplx characteristic_g(cplx lambda, const CharacteristicReference& ref) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < ref.lambdas.size(); ++i) {
        if (ref.m[i] == cplx{0.0, 0.0}) continue;
        cplx d = lambda - ref.lambdas[i];
        if (std::abs(d) < 1e-9 * std::max(1.0, std::abs(ref.lambdas[i])))
            throw NumericalError("characteristic function evaluated too close to a pole");
        s += ref.m[i] * ref.b[i] / d;
    }
    return 1.0 - s;
}

namespace {

cplx characteristic_dg(cplx lambda, const CharacteristicReference& ref) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < ref.lambdas.size(); ++i) {
        if (ref.m[i] == cplx{0.0, 0.0}) continue;
        cplx d = lambda - ref.lambdas[i];
        s += ref.m[i] * ref.b[i] / (d * d);
    }
    return s;
}

}  // namespace

Spectrum closed_loop_spectrum_char(const CharacteristicReference& ref, const Window& w,
                                   SpectrumLabel label) {
    bool perturbed = false;
    for (cplx c : ref.m) perturbed = perturbed || c != cplx{0.0, 0.0};
    if (!perturbed) return ref.reference;

    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    MeromorphicFn fn;
    fn.f = [&](cplx z) {
        try {
            return characteristic_g(z, ref);
        } catch (const NumericalError&) {
            return cplx{kNaN, kNaN};
        }
    };
    fn.df = [&](cplx z) { return characteristic_dg(z, ref); };

    double re_max = -std::numeric_limits<double>::infinity();
    double reach = 0.0;
    for (std::size_t i = 0; i < ref.lambdas.size(); ++i) {
        if (ref.m[i] == cplx{0.0, 0.0}) continue;
        fn.poles.push_back(ref.lambdas[i]);
        re_max = std::max(re_max, ref.lambdas[i].real());
        reach += std::abs(ref.m[i] * ref.b[i]);
    }
    double re_hi = re_max + reach + 1.0;

    Spectrum s;
    s.label = label;
    s.window = w;
    s.eigenvalues = find_zeros_rect(fn, w.re_min, re_hi, -w.im_max, w.im_max);
    for (std::size_t i = 0; i < ref.lambdas.size(); ++i)
        if (ref.m[i] == cplx{0.0, 0.0} && w.contains(ref.lambdas[i]))
            s.eigenvalues.push_back(ref.lambdas[i]);
    assert_simple(s.eigenvalues, to_string(label).c_str());
    sort_canonical(s.eigenvalues);
    return s;
}

}  // namespace hyperbc
