#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "tobsusy/errors.hpp"

namespace tobsusy {

using cplx = std::complex<double>;

// Uniform real parameter grid, endpoints included.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0;

    GridSpec() = default;
    GridSpec(double x_min_, double x_max_, int n_);

    double h() const { return (x_max - x_min) / (n - 1); }
    double point(int i) const { return x_min + i * h(); }
    std::vector<double> points() const;

    bool operator==(const GridSpec& o) const {
        return x_min == o.x_min && x_max == o.x_max && n == o.n;
    }
};

// Complex samples over a GridSpec.
struct GridFunction {
    GridSpec grid;
    std::vector<cplx> values;

    GridFunction() = default;
    GridFunction(GridSpec g, std::vector<cplx> v);

    int size() const { return grid.n; }

    static GridFunction sample(const GridSpec& g, const std::function<cplx(double)>& f);
};

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where);

}  // namespace tobsusy
