#include "tobsusy/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tobsusy::ode {

namespace {

// Dormand-Prince RK5(4)7M coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// embedded 4th-order weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

struct Deriv {
    cplx dphi, ddphi;
};

inline Deriv rhs(const std::function<cplx(double)>& q, double x, const State& y) {
    return {y.dphi, q(x) * y.phi};
}

inline State step_state(const State& y, double h, const Deriv& k, double w) {
    return {y.phi + h * w * k.dphi, y.dphi + h * w * k.ddphi};
}

inline double magnitude(const State& y) {
    return std::max(std::abs(y.phi), std::abs(y.dphi));
}

}  // namespace

IntegrateResult integrate_schrodinger(const std::function<cplx(double)>& q, double x0, double x1,
                                      State y0, const IntegrateOptions& opts) {
    IntegrateResult res;
    res.y = y0;
    if (x0 == x1) return res;
    const double dir = (x1 > x0) ? 1.0 : -1.0;
    const double span = std::abs(x1 - x0);
    double x = x0;
    // initial step from the local oscillation scale
    double h = dir * std::min(span, 1e-3 * span);
    {
        const double qa = std::abs(q(x0));
        if (qa > 0.0) h = dir * std::min(std::abs(h), 0.1 / std::sqrt(qa) + 1e-12 * span);
    }
    const double hmin = span * opts.min_step_factor;
    State y = y0;

    while ((dir > 0 && x < x1) || (dir < 0 && x > x1)) {
        if (std::abs(h) < hmin) {
            std::ostringstream os;
            os << "integrate_schrodinger: step underflow at x = " << x;
            throw NumericalError(os.str());
        }
        if ((dir > 0 && x + h > x1) || (dir < 0 && x + h < x1)) h = x1 - x;

        const Deriv k1 = rhs(q, x, y);
        const Deriv k2 = rhs(q, x + c2 * h, {y.phi + h * a21 * k1.dphi, y.dphi + h * a21 * k1.ddphi});
        const Deriv k3 = rhs(q, x + c3 * h,
                             {y.phi + h * (a31 * k1.dphi + a32 * k2.dphi),
                              y.dphi + h * (a31 * k1.ddphi + a32 * k2.ddphi)});
        const Deriv k4 = rhs(q, x + c4 * h,
                             {y.phi + h * (a41 * k1.dphi + a42 * k2.dphi + a43 * k3.dphi),
                              y.dphi + h * (a41 * k1.ddphi + a42 * k2.ddphi + a43 * k3.ddphi)});
        const Deriv k5 =
            rhs(q, x + c5 * h,
                {y.phi + h * (a51 * k1.dphi + a52 * k2.dphi + a53 * k3.dphi + a54 * k4.dphi),
                 y.dphi + h * (a51 * k1.ddphi + a52 * k2.ddphi + a53 * k3.ddphi + a54 * k4.ddphi)});
        const Deriv k6 = rhs(
            q, x + h,
            {y.phi + h * (a61 * k1.dphi + a62 * k2.dphi + a63 * k3.dphi + a64 * k4.dphi +
                          a65 * k5.dphi),
             y.dphi + h * (a61 * k1.ddphi + a62 * k2.ddphi + a63 * k3.ddphi + a64 * k4.ddphi +
                           a65 * k5.ddphi)});

        const State y5 = {
            y.phi + h * (b1 * k1.dphi + b3 * k3.dphi + b4 * k4.dphi + b5 * k5.dphi + b6 * k6.dphi),
            y.dphi +
                h * (b1 * k1.ddphi + b3 * k3.ddphi + b4 * k4.ddphi + b5 * k5.ddphi + b6 * k6.ddphi)};
        const Deriv k7 = rhs(q, x + h, y5);
        const State y4 = {y.phi + h * (e1 * k1.dphi + e3 * k3.dphi + e4 * k4.dphi + e5 * k5.dphi +
                                       e6 * k6.dphi + e7 * k7.dphi),
                          y.dphi + h * (e1 * k1.ddphi + e3 * k3.ddphi + e4 * k4.ddphi +
                                        e5 * k5.ddphi + e6 * k6.ddphi + e7 * k7.ddphi)};

        const double scale_phi = opts.abs_tol + opts.rel_tol * std::max(std::abs(y.phi), std::abs(y5.phi));
        const double scale_dphi =
            opts.abs_tol + opts.rel_tol * std::max(std::abs(y.dphi), std::abs(y5.dphi));
        const double err = std::max(std::abs(y5.phi - y4.phi) / scale_phi,
                                    std::abs(y5.dphi - y4.dphi) / scale_dphi);

        if (err <= 1.0 || std::abs(h) <= hmin * 2.0) {
            x += h;
            y = y5;
            ++res.steps;
            if (res.steps > opts.max_steps)
                throw NumericalError("integrate_schrodinger: step budget exhausted");
            const double m = magnitude(y);
            if (m > opts.renorm_threshold) {
                y.phi /= m;
                y.dphi /= m;
                ++res.renormalizations;
            }
            if (!std::isfinite(y.phi.real()) || !std::isfinite(y.dphi.real()) ||
                !std::isfinite(y.phi.imag()) || !std::isfinite(y.dphi.imag())) {
                std::ostringstream os;
                os << "integrate_schrodinger: non-finite solution at x = " << x;
                throw NumericalError(os.str());
            }
        }
        const double grow = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
    }
    res.y = y;
    return res;
}

}  // namespace tobsusy::ode
