#include "tobsusy/fd.hpp"

#include <algorithm>
#include <cmath>

namespace tobsusy::fd {

// Fornberg, Math. Comp. 51 (1988): recursive generation of FD weights on
// arbitrary nodes. Exact up to rounding for the node counts used here.
std::vector<double> fornberg_weights(double x0, const std::vector<double>& xs, int m) {
    const int nn = static_cast<int>(xs.size());
    if (nn == 0 || m < 0 || m >= nn)
        throw ValidationError("fornberg_weights: need more nodes than derivative order");
    // c[k][j]: weight of node j for the k-th derivative
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(nn, 0.0));
    double c1 = 1.0;
    double c4 = xs[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < nn; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = xs[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = xs[i] - xs[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k][j] = ((c4)*c[k][j] - k * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c[m];
}

std::vector<StencilRow> derivative_rows(int n, double h, int order, int accuracy) {
    if (order != 1 && order != 2) throw ValidationError("derivative_rows: order must be 1 or 2");
    if (accuracy != 2 && accuracy != 4)
        throw ValidationError("derivative_rows: accuracy must be 2 or 4");
    // One-sided rows need accuracy + order nodes to keep the order; central
    // rows use 2r+1 with r = accuracy/2.
    const int width = accuracy + order;
    if (n < width) throw NumericalError("derivative_rows: stencil wider than grid");
    const int r = accuracy / 2;

    std::vector<StencilRow> rows(n);
    const double scale = std::pow(h, -order);

    // offsets in index units
    auto weights_for = [&](int first, int count, int at) {
        std::vector<double> xs(count);
        for (int j = 0; j < count; ++j) xs[j] = static_cast<double>(first + j - at);
        std::vector<double> w = fornberg_weights(0.0, xs, order);
        for (double& v : w) v *= scale;
        return w;
    };

    // central stencil has 2r+1 nodes; one-sided rows use `width` nodes
    for (int i = 0; i < n; ++i) {
        if (i >= r && i + r < n) {
            rows[i].first_col = i - r;
            rows[i].w = weights_for(i - r, 2 * r + 1, i);
        } else {
            const int first = (i < r) ? 0 : n - width;
            rows[i].first_col = first;
            rows[i].w = weights_for(first, width, i);
        }
    }
    return rows;
}

std::vector<cplx> differentiate(const std::vector<cplx>& values, double h, int order,
                                int accuracy) {
    const int n = static_cast<int>(values.size());
    const auto rows = derivative_rows(n, h, order, accuracy);
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    for (int i = 0; i < n; ++i) {
        cplx s(0.0, 0.0);
        const auto& row = rows[i];
        for (std::size_t j = 0; j < row.w.size(); ++j)
            s += row.w[j] * values[row.first_col + static_cast<int>(j)];
        out[i] = s;
    }
    return out;
}

GridFunction differentiate(const GridFunction& f, int order, int accuracy) {
    return {f.grid, differentiate(f.values, f.grid.h(), order, accuracy)};
}

}  // namespace tobsusy::fd
