#pragma once

#include <string>
#include <vector>

#include "tobsusy/grid.hpp"

namespace tobsusy {

// One closed-form piece of a piecewise contour: a complex polynomial in x,
// active from `start` up to the next segment's start (right-continuous).
// The first segment also extends to the left of its start.
struct ContourSegment {
    double start = 0.0;
    std::vector<cplx> poly;  // r(x) = sum poly[j] * x^j
};

// r(x) and its first three derivatives at one parameter value.
struct ContourJet {
    cplx r, r1, r2, r3;
};

// A complexified coordinate contour r(x).
//
//   LineShift:  r(x) = x - i*eps
//   Toboggan:   r(x) = -i [ i (x - i*eps) ]^(2N+1)
//   Piecewise:  polynomial segments
//
// `mirrored` selects the pointwise complex conjugate curve x -> conj(r(x));
// it is toggled by conjugate_contour so that eps can stay positive.
class ContourSpec {
public:
    enum class Family { LineShift, Toboggan, Piecewise };

    static ContourSpec line_shift(double eps);
    static ContourSpec toboggan(int winding_index, double eps);
    static ContourSpec piecewise(std::vector<ContourSegment> segments);

    Family family() const { return family_; }
    double epsilon() const { return epsilon_; }
    int winding_index() const { return winding_index_; }
    const std::vector<ContourSegment>& segments() const { return segments_; }
    bool mirrored() const { return mirrored_; }

    // Short identifier used as operator domain/codomain tag ("..." / "...*").
    std::string tag() const;

    friend ContourSpec conjugate_contour(const ContourSpec& spec);
    friend ContourJet eval_jet(const ContourSpec& spec, double x);

private:
    ContourSpec() = default;

    Family family_ = Family::LineShift;
    double epsilon_ = 1.0;
    int winding_index_ = 0;
    std::vector<ContourSegment> segments_;
    bool mirrored_ = false;
};

ContourJet eval_jet(const ContourSpec& spec, double x);
ContourSpec conjugate_contour(const ContourSpec& spec);

struct WindingOptions {
    // Relative-cancellation guard: error out when |r(x)-bp| drops below
    // exclusion_scale * max(|r(x)|, |bp|) at a sample.
    double exclusion_scale = 1e-8;
    int max_refine_depth = 48;
};

// Accumulated arg(r(x) - branch_point) / 2pi along the sampled contour,
// refining any step whose principal argument change is not clearly < pi.
double winding(const ContourSpec& spec, cplx branch_point, double x_min, double x_max,
               int samples, const WindingOptions& opts = {});

// r'(x) != 0 at every sample point, within tolerance.
void check_smooth(const ContourSpec& spec, const std::vector<double>& xs, double tol = 1e-12);

}  // namespace tobsusy
