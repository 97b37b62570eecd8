#include "tobsusy/contours.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tobsusy {

namespace {

cplx pow_int(cplx z, int k) {
    cplx out(1.0, 0.0);
    for (int i = 0; i < k; ++i) out *= z;
    return out;
}

ContourJet jet_line_shift(double x, double eps) {
    return {cplx(x, -eps), cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
}

ContourJet jet_toboggan(double x, double eps, int N) {
    // r = -i u^p with u = eps + i x, p = 2N+1, du/dx = i
    const int p = 2 * N + 1;
    const cplx u(eps, x);
    ContourJet j;
    j.r = cplx(0.0, -1.0) * pow_int(u, p);
    j.r1 = static_cast<double>(p) * pow_int(u, p - 1);
    j.r2 = (p >= 2) ? cplx(0.0, 1.0) * static_cast<double>(p * (p - 1)) * pow_int(u, p - 2)
                    : cplx(0.0, 0.0);
    j.r3 = (p >= 3) ? cplx(-static_cast<double>(p * (p - 1) * (p - 2)), 0.0) * pow_int(u, p - 3)
                    : cplx(0.0, 0.0);
    return j;
}

ContourJet jet_poly(double x, const std::vector<cplx>& a) {
    // Horner evaluation of the polynomial and its first three derivatives.
    cplx r(0.0, 0.0), r1(0.0, 0.0), r2(0.0, 0.0), r3(0.0, 0.0);
    for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
        r3 = r3 * x + 3.0 * r2;
        r2 = r2 * x + 2.0 * r1;
        r1 = r1 * x + r;
        r = r * x + a[j];
    }
    return {r, r1, r2, r3};
}

}  // namespace

ContourSpec ContourSpec::line_shift(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw ValidationError("ContourSpec: epsilon must be positive");
    ContourSpec s;
    s.family_ = Family::LineShift;
    s.epsilon_ = eps;
    return s;
}

ContourSpec ContourSpec::toboggan(int winding_index, double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw ValidationError("ContourSpec: epsilon must be positive");
    if (winding_index < 0) throw ValidationError("ContourSpec: winding_index must be >= 0");
    ContourSpec s;
    s.family_ = Family::Toboggan;
    s.epsilon_ = eps;
    s.winding_index_ = winding_index;
    return s;
}

ContourSpec ContourSpec::piecewise(std::vector<ContourSegment> segments) {
    if (segments.empty()) throw ValidationError("ContourSpec: piecewise needs segments");
    for (std::size_t i = 0; i + 1 < segments.size(); ++i)
        if (!(segments[i].start < segments[i + 1].start))
            throw ValidationError("ContourSpec: breakpoints must be strictly increasing");
    for (const auto& seg : segments)
        if (seg.poly.empty()) throw ValidationError("ContourSpec: empty segment polynomial");
    ContourSpec s;
    s.family_ = Family::Piecewise;
    s.epsilon_ = 1.0;
    s.segments_ = std::move(segments);
    return s;
}

std::string ContourSpec::tag() const {
    std::ostringstream os;
    switch (family_) {
        case Family::LineShift: os << "line(eps=" << epsilon_ << ")"; break;
        case Family::Toboggan: os << "toboggan(N=" << winding_index_ << ",eps=" << epsilon_ << ")"; break;
        case Family::Piecewise: os << "piecewise(" << segments_.size() << ")"; break;
    }
    if (mirrored_) os << "*";
    return os.str();
}

ContourJet eval_jet(const ContourSpec& spec, double x) {
    if (!std::isfinite(x)) throw ValidationError("eval_jet: non-finite parameter");
    ContourJet j;
    switch (spec.family_) {
        case ContourSpec::Family::LineShift: j = jet_line_shift(x, spec.epsilon_); break;
        case ContourSpec::Family::Toboggan:
            j = jet_toboggan(x, spec.epsilon_, spec.winding_index_);
            break;
        case ContourSpec::Family::Piecewise: {
            // right-continuous: at a breakpoint the right-hand piece applies
            const auto& segs = spec.segments_;
            std::size_t k = 0;
            while (k + 1 < segs.size() && x >= segs[k + 1].start) ++k;
            j = jet_poly(x, segs[k].poly);
            break;
        }
    }
    if (spec.mirrored_) {
        j.r = std::conj(j.r);
        j.r1 = std::conj(j.r1);
        j.r2 = std::conj(j.r2);
        j.r3 = std::conj(j.r3);
    }
    return j;
}

ContourSpec conjugate_contour(const ContourSpec& spec) {
    ContourSpec s = spec;
    s.mirrored_ = !s.mirrored_;
    return s;
}

void check_smooth(const ContourSpec& spec, const std::vector<double>& xs, double tol) {
    for (double x : xs) {
        const ContourJet j = eval_jet(spec, x);
        if (std::abs(j.r1) <= tol) {
            std::ostringstream os;
            os << "contour singular: r'(x) ~ 0 at x = " << x;
            throw NumericalError(os.str());
        }
    }
}

double winding(const ContourSpec& spec, cplx branch_point, double x_min, double x_max,
               int samples, const WindingOptions& opts) {
    if (samples < 2) throw ValidationError("winding: need at least 2 samples");
    if (!(x_min < x_max)) throw ValidationError("winding: require x_min < x_max");

    auto displaced = [&](double x) -> cplx {
        const cplx w = eval_jet(spec, x).r - branch_point;
        const double scale = std::max(std::abs(w + branch_point), std::abs(branch_point));
        if (std::abs(w) <= opts.exclusion_scale * scale || w == cplx(0.0, 0.0)) {
            std::ostringstream os;
            os << "winding: contour within exclusion radius of branch point at x = " << x;
            throw NumericalError(os.str());
        }
        return w;
    };

    // Accumulate principal argument increments; bisect any step that turns
    // by pi/2 or more, which keeps the unwrapping unambiguous.
    double total = 0.0;
    const double step_limit = 0.5 * M_PI;

    struct Seg {
        double xa, xb;
        cplx wa, wb;
        int depth;
    };
    std::vector<Seg> stack;
    const double h = (x_max - x_min) / (samples - 1);
    std::vector<cplx> base(samples);
    for (int i = 0; i < samples; ++i) base[i] = displaced(x_min + i * h);
    for (int i = samples - 1; i > 0; --i)
        stack.push_back({x_min + (i - 1) * h, x_min + i * h, base[i - 1], base[i], 0});

    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const double d = std::arg(s.wb / s.wa);
        if (std::abs(d) < step_limit) {
            total += d;
            continue;
        }
        if (s.depth >= opts.max_refine_depth)
            throw NumericalError("winding: argument step >= pi after maximum refinement");
        const double xm = 0.5 * (s.xa + s.xb);
        const cplx wm = displaced(xm);
        stack.push_back({xm, s.xb, wm, s.wb, s.depth + 1});
        stack.push_back({s.xa, xm, s.wa, wm, s.depth + 1});
    }
    return total / (2.0 * M_PI);
}

}  // namespace tobsusy
