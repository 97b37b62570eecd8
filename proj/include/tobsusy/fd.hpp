#pragma once

#include <vector>

#include "tobsusy/grid.hpp"

namespace tobsusy::fd {

// Fornberg weights: coefficients w such that f^(m)(x0) ~ sum w[j] f(xs[j]).
std::vector<double> fornberg_weights(double x0, const std::vector<double>& xs, int m);

// Stencil row of a uniform-grid derivative matrix.
struct StencilRow {
    int first_col = 0;
    std::vector<double> w;
};

// Rows of the n x n derivative matrix of the given order/accuracy on a
// uniform grid with spacing h. Interior rows are central; near the ends the
// stencil shifts one-sided, keeping the same order of accuracy.
std::vector<StencilRow> derivative_rows(int n, double h, int order, int accuracy);

// Apply an order/accuracy derivative to sampled values.
std::vector<cplx> differentiate(const std::vector<cplx>& values, double h, int order,
                                int accuracy);

GridFunction differentiate(const GridFunction& f, int order, int accuracy);

}  // namespace tobsusy::fd
