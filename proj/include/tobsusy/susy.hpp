#pragma once

#include "tobsusy/grid.hpp"

namespace tobsusy {

// Closed-form model functions of the shifted coordinate z = x -+ i*eps:
//
//   psi^-(x) = z- exp(-i z-^3 / 3)          W^-(x) = -[1/z- - i z-^2]
//   psi^+(x) = exp(+i z+^3 / 3) / z+        W^+(x) = +[1/z+ - i z+^2]
//   V^-(x)   = -4i z- - z-^4                V^+(x) = 2/z+^2 - z+^4
//
// Both psi^(+-) are zero modes of their own potentials (E0 = 0).
struct ClosedFormModel {
    enum class Kind { PsiMinus, PsiPlus, WMinus, WPlus, VMinus, VPlus };

    Kind kind;
    double epsilon;

    ClosedFormModel(Kind k, double eps);
};

cplx eval_model(const ClosedFormModel& model, double x);

// Closed-form x-derivative of the model function (used where a residual must
// be a pure rounding quantity).
cplx eval_model_derivative(const ClosedFormModel& model, double x);

GridFunction sample_model(const ClosedFormModel& model, const GridSpec& grid);

struct SuperpotentialOptions {
    // A sample with |psi| <= nodal_tolerance_factor * max|psi| counts as a
    // nodal zero and is an error.
    double nodal_tolerance_factor = 1e-12;
    int accuracy = 4;
};

// W = -psi' / psi with finite-difference psi'.
GridFunction superpotential_from_wavefunction(const GridFunction& psi,
                                              const SuperpotentialOptions& opts = {});

// max over interior points of |(V - E0) - (W^2 - W')|, W' by 4th-order
// differences. Interior excludes the one-sided boundary stencils.
double riccati_residual(const GridFunction& W, const GridFunction& V, cplx E0);

// (V_minus, V_plus) = (W^2 - W' + E0, W^2 + W' + E0).
std::pair<GridFunction, GridFunction> partner_potentials(const GridFunction& W, cplx E0);

// max over the grid of |([W+]^2 - W+') - conj([W-]^2 + W-')| with all
// derivatives in closed form; pure rounding for every grid.
double verify_modified_relation(double epsilon, const GridSpec& grid);

struct NormProfile {
    double l2_norm;           // truncated L2 norm over the grid (trapezoidal)
    double decay_coefficient; // c fitted to log|psi| ~ a - c x^2 on the outer 20%
};

NormProfile norm_profile(const ClosedFormModel& model, const GridSpec& grid);

}  // namespace tobsusy
