#pragma once

#include <functional>

#include "hyperbc/types.hpp"

namespace hyperbc {

// A meromorphic function with analytic derivative and a known finite pole set
// (simple poles). Zeros are located by the argument principle on rectangles:
// the boundary winding of f equals (#zeros - #poles) inside, so the zero count
// is exact by construction and no root can be missed.
struct MeromorphicFn {
    std::function<cplx(cplx)> f;
    std::function<cplx(cplx)> df;
    std::vector<cplx> poles;
};

struct RootSearchOptions {
    double residual_tol = 1e-10;
    // clusters tighter than cluster_tol*max(1,|z|) are a simplicity violation
    double cluster_tol = 1e-6;
    int max_depth = 60;
    int boundary_retries = 5;
};

// All zeros of fn inside [re0,re1]x[im0,im1], Newton-refined. Throws
// NumericalError when the count cannot be certified after retries.
std::vector<cplx> find_zeros_rect(const MeromorphicFn& fn, double re0, double re1, double im0,
                                  double im1, const RootSearchOptions& opt = {});

}  // namespace hyperbc
