// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// is only entered after a runtime CPU-feature check in kernels.cpp.
#if defined(__x86_64__) || defined(_M_X64)

#include "pslab/kernels.hpp"

#include <immintrin.h>

namespace pslab::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// [w0, w1] -> [w0, w0, w1, w1]
inline __m256d dup_pairs(const double* w) {
    __m128d wv = _mm_loadu_pd(w);
    return _mm256_permute4x64_pd(_mm256_castpd128_pd256(wv), 0x50);
}

const __m256d k_signs = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);

} // namespace

cplx cdot_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc1 = _mm256_setzero_pd(), acc2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc1 = _mm256_fmadd_pd(va, vb, acc1);
        acc2 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), acc2);
    }
    double re = hsum(acc1);
    double im = hsum(_mm256_mul_pd(acc2, k_signs));
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx wcdot_avx2(const double* w, const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc1 = _mm256_setzero_pd(), acc2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * i), dup_pairs(w + i));
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc1 = _mm256_fmadd_pd(va, vb, acc1);
        acc2 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), acc2);
    }
    double re = hsum(acc1);
    double im = hsum(_mm256_mul_pd(acc2, k_signs));
    for (; i < n; ++i) {
        const double ar = w[i] * a[i].real(), ai = w[i] * a[i].imag();
        re += ar * b[i].real() + ai * b[i].imag();
        im += ar * b[i].imag() - ai * b[i].real();
    }
    return {re, im};
}

void cmul_avx2(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        __m256d t1 = _mm256_mul_pd(va, _mm256_movedup_pd(vb));
        __m256d t2 = _mm256_mul_pd(_mm256_permute_pd(va, 0x5), _mm256_permute_pd(vb, 0xF));
        _mm256_storeu_pd(po + 2 * i, _mm256_addsub_pd(t1, t2));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_avx2(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d t1 = _mm256_mul_pd(ar, vx);
        __m256d t2 = _mm256_mul_pd(ai, _mm256_permute_pd(vx, 0x5));
        __m256d prod = _mm256_addsub_pd(t1, t2);
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

double wnorm2_avx2(const double* w, const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(va, va), dup_pairs(w + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * std::norm(a[i]);
    return s;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

} // namespace pslab::kernels::detail

#endif
