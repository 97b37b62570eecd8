#pragma once

#include <functional>

#include "tobsusy/grid.hpp"

namespace tobsusy::ode {

// State of the second-order problem as a first-order pair (phi, phi').
struct State {
    cplx phi;
    cplx dphi;
};

struct IntegrateOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double renorm_threshold = 1e100;  // rescale the pair when exceeded
    double min_step_factor = 1e-14;   // of the interval length
    std::size_t max_steps = 20'000'000;
};

struct IntegrateResult {
    State y;
    std::size_t steps = 0;
    int renormalizations = 0;  // count of magnitude rescalings applied
};

// Adaptive Dormand-Prince 5(4) for phi'' = q(x) phi from x0 to x1
// (either direction). The solution pair is rescaled whenever its magnitude
// exceeds renorm_threshold; only the overall scale is lost, which matched
// Wronskian ratios do not depend on.
IntegrateResult integrate_schrodinger(const std::function<cplx(double)>& q, double x0, double x1,
                                      State y0, const IntegrateOptions& opts = {});

}  // namespace tobsusy::ode
