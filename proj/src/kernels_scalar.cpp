#include "tobsusy/kernels.hpp"

#include <algorithm>

namespace tobsusy::kernels::scalar {

namespace {

void mul_(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void conj_(const cplx* a, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::conj(a[i]);
}

void axpy_(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotu_(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx p = a[i] * b[i];
        re += p.real();
        im += p.imag();
    }
    return {re, im};
}

double norm2sq_(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

void band_matvec_(std::size_t n, int kl, int ku, const cplx* a, const cplx* x, cplx* y,
                  bool conj_x) {
    const int w = kl + ku + 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j0 = (static_cast<int>(i) >= kl) ? i - kl : 0;
        const std::size_t j1 = std::min(n - 1, i + static_cast<std::size_t>(ku));
        const cplx* row = a + i * w + kl - static_cast<int>(i);
        double re = 0.0, im = 0.0;
        if (conj_x) {
            for (std::size_t j = j0; j <= j1; ++j) {
                const cplx p = row[j] * std::conj(x[j]);
                re += p.real();
                im += p.imag();
            }
        } else {
            for (std::size_t j = j0; j <= j1; ++j) {
                const cplx p = row[j] * x[j];
                re += p.real();
                im += p.imag();
            }
        }
        y[i] = {re, im};
    }
}

}  // namespace

const Ops ops = {mul_, conj_, axpy_, dotu_, norm2sq_, band_matvec_};

}  // namespace tobsusy::kernels::scalar
