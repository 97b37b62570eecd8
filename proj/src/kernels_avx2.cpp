#include "tobsusy/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

// AVX2/FMA variants. Layout: one __m256d = two complex doubles
// [re0, im0, re1, im1]. Compiled with -mavx2 -mfma, selected at runtime.

namespace tobsusy::kernels::avx2 {

namespace {

const __m256d kConjMask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);

// (a0*b0, a1*b1) for complex lanes
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);          // [br0 br0 br1 br1]
    const __m256d b_im = _mm256_permute_pd(b, 0xF);     // [bi0 bi0 bi1 bi1]
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);     // [ai0 ar0 ai1 ar1]
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

void mul_(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* po = reinterpret_cast<double*>(out);
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(po + 2 * i, cmul(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void conj_(const cplx* a, cplx* out, std::size_t n) {
    std::size_t i = 0;
    const double* pa = reinterpret_cast<const double*>(a);
    double* po = reinterpret_cast<double*>(out);
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        _mm256_storeu_pd(po + 2 * i, _mm256_xor_pd(va, kConjMask));
    }
    for (; i < n; ++i) out[i] = std::conj(a[i]);
}

void axpy_(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * i);
        const __m256d vy = _mm256_loadu_pd(py + 2 * i);
        const __m256d x_sw = _mm256_permute_pd(vx, 0x5);
        const __m256d prod = _mm256_fmaddsub_pd(vx, ar, _mm256_mul_pd(x_sw, ai));
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotu_(const cplx* a, const cplx* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc = _mm256_add_pd(acc, cmul(va, vb));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double re = lanes[0] + lanes[2];
    double im = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        const cplx p = a[i] * b[i];
        re += p.real();
        im += p.imag();
    }
    return {re, im};
}

double norm2sq_(const cplx* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const double* pa = reinterpret_cast<const double*>(a);
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

void band_matvec_(std::size_t n, int kl, int ku, const cplx* a, const cplx* x, cplx* y,
                  bool conj_x) {
    const int w = kl + ku + 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j0 = (static_cast<int>(i) >= kl) ? i - kl : 0;
        const std::size_t j1 = std::min(n - 1, i + static_cast<std::size_t>(ku));
        const cplx* row = a + i * w + kl - static_cast<int>(i);
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = j0;
        const double* pr = reinterpret_cast<const double*>(row);
        const double* px = reinterpret_cast<const double*>(x);
        for (; j + 2 <= j1 + 1; j += 2) {
            const __m256d vr = _mm256_loadu_pd(pr + 2 * j);
            __m256d vx = _mm256_loadu_pd(px + 2 * j);
            if (conj_x) vx = _mm256_xor_pd(vx, kConjMask);
            acc = _mm256_add_pd(acc, cmul(vr, vx));
        }
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        double re = lanes[0] + lanes[2];
        double im = lanes[1] + lanes[3];
        for (; j <= j1; ++j) {
            const cplx xv = conj_x ? std::conj(x[j]) : x[j];
            const cplx p = row[j] * xv;
            re += p.real();
            im += p.imag();
        }
        y[i] = {re, im};
    }
}

}  // namespace

const Ops ops = {mul_, conj_, axpy_, dotu_, norm2sq_, band_matvec_};

}  // namespace tobsusy::kernels::avx2
