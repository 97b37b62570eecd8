#include "tobsusy/grid.hpp"

#include <cmath>
#include <functional>

namespace tobsusy {

GridSpec::GridSpec(double x_min_, double x_max_, int n_) : x_min(x_min_), x_max(x_max_), n(n_) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_min >= x_max)
        throw ValidationError("GridSpec: require finite x_min < x_max");
    if (n < 16) throw ValidationError("GridSpec: require n >= 16");
}

std::vector<double> GridSpec::points() const {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = point(i);
    return xs;
}

GridFunction::GridFunction(GridSpec g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.n)
        throw ValidationError("GridFunction: value count does not match grid");
    for (const cplx& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ValidationError("GridFunction: non-finite sample");
}

GridFunction GridFunction::sample(const GridSpec& g, const std::function<cplx(double)>& f) {
    std::vector<cplx> v(g.n);
    for (int i = 0; i < g.n; ++i) v[i] = f(g.point(i));
    return {g, std::move(v)};
}

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where) {
    if (!(a.grid == b.grid)) throw ValidationError(std::string(where) + ": grid mismatch");
}

}  // namespace tobsusy
