#include "tobsusy/susy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tobsusy/fd.hpp"
#include "tobsusy/kernels.hpp"

namespace tobsusy {

ClosedFormModel::ClosedFormModel(Kind k, double eps) : kind(k), epsilon(eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw ValidationError("ClosedFormModel: epsilon must be positive");
}

cplx eval_model(const ClosedFormModel& model, double x) {
    if (!std::isfinite(x)) throw ValidationError("eval_model: non-finite x");
    const cplx zm(x, -model.epsilon);
    const cplx zp(x, +model.epsilon);
    const cplx i(0.0, 1.0);
    switch (model.kind) {
        case ClosedFormModel::Kind::PsiMinus: return zm * std::exp(-i * zm * zm * zm / 3.0);
        case ClosedFormModel::Kind::PsiPlus: return std::exp(i * zp * zp * zp / 3.0) / zp;
        case ClosedFormModel::Kind::WMinus: return -(1.0 / zm - i * zm * zm);
        case ClosedFormModel::Kind::WPlus: return 1.0 / zp - i * zp * zp;
        case ClosedFormModel::Kind::VMinus: return -4.0 * i * zm - zm * zm * zm * zm;
        case ClosedFormModel::Kind::VPlus: return 2.0 / (zp * zp) - zp * zp * zp * zp;
    }
    throw ValidationError("eval_model: unknown kind");
}

cplx eval_model_derivative(const ClosedFormModel& model, double x) {
    if (!std::isfinite(x)) throw ValidationError("eval_model_derivative: non-finite x");
    const cplx zm(x, -model.epsilon);
    const cplx zp(x, +model.epsilon);
    const cplx i(0.0, 1.0);
    switch (model.kind) {
        case ClosedFormModel::Kind::PsiMinus:
            return (1.0 / zm - i * zm * zm) * eval_model(model, x);
        case ClosedFormModel::Kind::PsiPlus:
            return (-1.0 / zp + i * zp * zp) * eval_model(model, x);
        case ClosedFormModel::Kind::WMinus: return 1.0 / (zm * zm) + 2.0 * i * zm;
        case ClosedFormModel::Kind::WPlus: return -1.0 / (zp * zp) - 2.0 * i * zp;
        case ClosedFormModel::Kind::VMinus: return -4.0 * i - 4.0 * zm * zm * zm;
        case ClosedFormModel::Kind::VPlus:
            return -4.0 / (zp * zp * zp) - 4.0 * zp * zp * zp;
    }
    throw ValidationError("eval_model_derivative: unknown kind");
}

GridFunction sample_model(const ClosedFormModel& model, const GridSpec& grid) {
    return GridFunction::sample(grid, [&](double x) { return eval_model(model, x); });
}

GridFunction superpotential_from_wavefunction(const GridFunction& psi,
                                              const SuperpotentialOptions& opts) {
    double peak = 0.0;
    for (const cplx& v : psi.values) peak = std::max(peak, std::abs(v));
    const double tol = opts.nodal_tolerance_factor * peak;
    for (int i = 0; i < psi.size(); ++i) {
        if (std::abs(psi.values[i]) <= tol) {
            std::ostringstream os;
            os << "superpotential_from_wavefunction: nodal zero at grid index " << i;
            throw NumericalError(os.str());
        }
    }
    GridFunction dpsi = fd::differentiate(psi, 1, opts.accuracy);
    std::vector<cplx> w(psi.size());
    for (int i = 0; i < psi.size(); ++i) w[i] = -dpsi.values[i] / psi.values[i];
    return {psi.grid, std::move(w)};
}

double riccati_residual(const GridFunction& W, const GridFunction& V, cplx E0) {
    require_same_grid(W, V, "riccati_residual");
    const GridFunction dW = fd::differentiate(W, 1, 4);
    double worst = 0.0;
    // skip the one-sided rows (reach of the 4th-order central stencil is 2)
    for (int i = 2; i < W.size() - 2; ++i) {
        const cplx lhs = V.values[i] - E0;
        const cplx rhs = W.values[i] * W.values[i] - dW.values[i];
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

std::pair<GridFunction, GridFunction> partner_potentials(const GridFunction& W, cplx E0) {
    const GridFunction dW = fd::differentiate(W, 1, 4);
    std::vector<cplx> vm(W.size()), vp(W.size());
    for (int i = 0; i < W.size(); ++i) {
        const cplx w2 = W.values[i] * W.values[i];
        vm[i] = w2 - dW.values[i] + E0;
        vp[i] = w2 + dW.values[i] + E0;
    }
    return {GridFunction{W.grid, std::move(vm)}, GridFunction{W.grid, std::move(vp)}};
}

double verify_modified_relation(double epsilon, const GridSpec& grid) {
    const ClosedFormModel wm(ClosedFormModel::Kind::WMinus, epsilon);
    const ClosedFormModel wp(ClosedFormModel::Kind::WPlus, epsilon);
    double worst = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.point(i);
        const cplx Wm = eval_model(wm, x), dWm = eval_model_derivative(wm, x);
        const cplx Wp = eval_model(wp, x), dWp = eval_model_derivative(wp, x);
        const cplx lhs = Wp * Wp - dWp;
        const cplx rhs = std::conj(Wm * Wm + dWm);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

NormProfile norm_profile(const ClosedFormModel& model, const GridSpec& grid) {
    if (model.kind != ClosedFormModel::Kind::PsiMinus &&
        model.kind != ClosedFormModel::Kind::PsiPlus)
        throw ValidationError("norm_profile: kind must be PsiMinus or PsiPlus");
    const GridFunction psi = sample_model(model, grid);
    const double h = grid.h();

    double acc = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double m2 = std::norm(psi.values[i]);
        acc += (i == 0 || i == grid.n - 1) ? 0.5 * m2 : m2;
    }
    const double l2 = std::sqrt(acc * h);

    // least squares of log|psi| against (1, -x^2) over the outer 20% of the
    // grid (10% at each end)
    double s11 = 0, s12 = 0, s22 = 0, b1 = 0, b2 = 0;
    const double cut = grid.x_min + 0.9 * (grid.x_max - grid.x_min);
    const double lo_cut = grid.x_min + 0.1 * (grid.x_max - grid.x_min);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.point(i);
        if (x < cut && x > lo_cut) continue;
        const double a = std::abs(psi.values[i]);
        if (a <= 0.0) continue;
        const double y = std::log(a);
        const double u = -x * x;
        s11 += 1.0;
        s12 += u;
        s22 += u * u;
        b1 += y;
        b2 += y * u;
    }
    const double det = s11 * s22 - s12 * s12;
    if (std::abs(det) < 1e-300) throw NumericalError("norm_profile: degenerate tail fit");
    const double c = (s11 * b2 - s12 * b1) / det;
    return {l2, c};
}

}  // namespace tobsusy
