#include "hyperbc/types.hpp"

#include <algorithm>
#include <cmath>

namespace hyperbc {

double Window::diameter() const {
    double w = 2.0 * im_max;
    double h = -re_min;  // spectra of interest end at Re ~ 0
    return std::sqrt(w * w + h * h);
}

std::string to_string(SpectrumLabel label) {
    switch (label) {
        case SpectrumLabel::OpenLoop: return "OpenLoop";
        case SpectrumLabel::Intermediate: return "Intermediate";
        case SpectrumLabel::Desired: return "Desired";
        case SpectrumLabel::ClosedLoop: return "ClosedLoop";
        case SpectrumLabel::ObserverIntermediate: return "ObserverIntermediate";
        case SpectrumLabel::ObserverDesired: return "ObserverDesired";
        case SpectrumLabel::ObserverClosedLoop: return "ObserverClosedLoop";
    }
    throw ContractViolation("unknown spectrum label");
}

SpectrumLabel spectrum_label_from_string(const std::string& s) {
    for (auto label : {SpectrumLabel::OpenLoop, SpectrumLabel::Intermediate,
                       SpectrumLabel::Desired, SpectrumLabel::ClosedLoop,
                       SpectrumLabel::ObserverIntermediate, SpectrumLabel::ObserverDesired,
                       SpectrumLabel::ObserverClosedLoop}) {
        if (to_string(label) == s) return label;
    }
    throw ConfigError("unknown spectrum label: " + s);
}

void sort_canonical(std::vector<cplx>& v) {
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

void sort_modal(std::vector<cplx>& v) {
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        double ia = std::abs(a.imag()), ib = std::abs(b.imag());
        if (ia != ib) return ia < ib;
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
}

void assert_simple(const std::vector<cplx>& v, const char* who) {
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = i + 1; j < v.size(); ++j) {
            double scale = std::max(1.0, std::abs(v[i]));
            if (std::abs(v[i] - v[j]) < 1e-6 * scale) {
                throw AssumptionError(std::string(who) + ": eigenvalue simplicity violation near (" +
                                      std::to_string(v[i].real()) + ", " +
                                      std::to_string(v[i].imag()) + ")");
            }
        }
    }
}

}  // namespace hyperbc
