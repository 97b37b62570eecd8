#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Low-level array kernels used by the grid and operator layers.
//
// Each kernel exists as a scalar reference implementation and an AVX2
// variant. The active set is chosen once at startup from cpuid (override
// with TOBOGGAN_SUSY_SIMD=scalar|avx2); both sets stay callable so the
// test suite can check them against each other on the same data.

namespace tobsusy::kernels {

using cplx = std::complex<double>;

struct Ops {
    // out[i] = a[i] * b[i]
    void (*mul)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
    // out[i] = conj(a[i])
    void (*conj)(const cplx* a, cplx* out, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    // sum a[i] * b[i]   (unconjugated, bilinear)
    cplx (*dotu)(const cplx* a, const cplx* b, std::size_t n);
    // sum |a[i]|^2
    double (*norm2sq)(const cplx* a, std::size_t n);
    // Banded row-major matvec: y = A * x (or A * conj(x)).
    // Row i holds columns [i-kl, i+ku] at a[i*(kl+ku+1) + (j-i+kl)].
    void (*band_matvec)(std::size_t n, int kl, int ku, const cplx* a,
                        const cplx* x, cplx* y, bool conj_x);
};

namespace scalar {
extern const Ops ops;
}
namespace avx2 {
extern const Ops ops;       // valid to call only if avx2_supported()
}

bool avx2_supported();
const Ops& active();
std::string active_name();

}  // namespace tobsusy::kernels
