#include <cmath>
#include <numbers>

#include "doctest.h"

#include "hyperbc/rootfind.hpp"

using namespace hyperbc;

namespace {
bool has_root_near(const std::vector<cplx>& roots, cplx z, double tol = 1e-9) {
    for (cplx r : roots)
        if (std::abs(r - z) < tol) return true;
    return false;
}
}  // namespace

TEST_CASE("finds all zeros of sin in a rectangle") {
    MeromorphicFn fn{[](cplx z) { return std::sin(z); }, [](cplx z) { return std::cos(z); }, {}};
    auto roots = find_zeros_rect(fn, -0.5, 10.0, -1.0, 1.0);
    REQUIRE(roots.size() == 4);
    const double pi = std::numbers::pi;
    CHECK(has_root_near(roots, {0.0, 0.0}));
    CHECK(has_root_near(roots, {pi, 0.0}));
    CHECK(has_root_near(roots, {2 * pi, 0.0}));
    CHECK(has_root_near(roots, {3 * pi, 0.0}));
}

TEST_CASE("finds complex cube roots of unity") {
    MeromorphicFn fn{[](cplx z) { return z * z * z - 1.0; }, [](cplx z) { return 3.0 * z * z; }, {}};
    auto roots = find_zeros_rect(fn, -2.0, 2.0, -2.0, 2.0);
    REQUIRE(roots.size() == 3);
    const double pi = std::numbers::pi;
    CHECK(has_root_near(roots, {1.0, 0.0}));
    CHECK(has_root_near(roots, std::exp(cplx(0.0, 2 * pi / 3))));
    CHECK(has_root_near(roots, std::exp(cplx(0.0, -2 * pi / 3))));
}

TEST_CASE("accounts for declared poles in the winding count") {
    // f = 1 - 1/(z - 1) has one pole at 1 and one zero at 2
    MeromorphicFn fn{[](cplx z) { return 1.0 - 1.0 / (z - 1.0); },
                     [](cplx z) { return 1.0 / ((z - 1.0) * (z - 1.0)); },
                     {{1.0, 0.0}}};
    auto roots = find_zeros_rect(fn, 0.0, 3.0, -1.0, 1.0);
    REQUIRE(roots.size() == 1);
    CHECK(has_root_near(roots, {2.0, 0.0}));
}

TEST_CASE("empty rectangle yields no roots") {
    MeromorphicFn fn{[](cplx z) { return std::exp(z); }, [](cplx z) { return std::exp(z); }, {}};
    auto roots = find_zeros_rect(fn, -1.0, 1.0, -1.0, 1.0);
    CHECK(roots.empty());
}
