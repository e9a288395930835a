#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperbc {

using cplx = std::complex<double>;

// Configuration or input data violates a documented invariant.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A design assumption (Riesz property, simplicity, resolvent bound) failed on the data.
struct AssumptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical procedure could not meet its contract (missed roots, degeneracy, divergence).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its documented preconditions.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Half-plane strip {Re >= re_min, |Im| <= im_max} all spectra are reported on.
struct Window {
    double re_min = -30.0;
    double im_max = 200.0;

    bool contains(cplx z) const {
        return z.real() >= re_min && std::abs(z.imag()) <= im_max;
    }
    double diameter() const;
};

enum class SpectrumLabel {
    OpenLoop,
    Intermediate,
    Desired,
    ClosedLoop,
    ObserverIntermediate,
    ObserverDesired,
    ObserverClosedLoop,
};

std::string to_string(SpectrumLabel label);
SpectrumLabel spectrum_label_from_string(const std::string& s);

struct Spectrum {
    SpectrumLabel label = SpectrumLabel::OpenLoop;
    Window window;
    std::vector<cplx> eigenvalues;  // canonical order: (Re, Im) ascending
};

// Canonical (reporting) order: Re ascending, then Im ascending.
void sort_canonical(std::vector<cplx>& v);

// Modal (truncation) order: |Im| ascending, then Im, then Re. Truncated sums
// over the first n modes index this ordering.
void sort_modal(std::vector<cplx>& v);

// Pairwise-distinctness guard shared by every spectrum producer: clusters
// tighter than 1e-6*max(1,|lambda|) are a simplicity violation, not merged.
void assert_simple(const std::vector<cplx>& v, const char* who);

}  // namespace hyperbc
