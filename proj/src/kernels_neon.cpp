// NEON variants (aarch64). vld2q deinterleaves re/im, so the arithmetic is
// written on separated component vectors, two complex elements per step.
#if defined(__ARM_NEON) || defined(__aarch64__)

#include "pslab/kernels.hpp"

#include <arm_neon.h>

namespace pslab::kernels::detail {

cplx cdot_neon(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    float64x2_t re = vdupq_n_f64(0), im = vdupq_n_f64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t va = vld2q_f64(pa + 2 * i);
        float64x2x2_t vb = vld2q_f64(pb + 2 * i);
        re = vfmaq_f64(re, va.val[0], vb.val[0]);
        re = vfmaq_f64(re, va.val[1], vb.val[1]);
        im = vfmaq_f64(im, va.val[0], vb.val[1]);
        im = vfmsq_f64(im, va.val[1], vb.val[0]);
    }
    double sre = vaddvq_f64(re), sim = vaddvq_f64(im);
    for (; i < n; ++i) {
        sre += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        sim += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {sre, sim};
}

cplx wcdot_neon(const double* w, const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    float64x2_t re = vdupq_n_f64(0), im = vdupq_n_f64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t va = vld2q_f64(pa + 2 * i);
        float64x2x2_t vb = vld2q_f64(pb + 2 * i);
        float64x2_t wv = vld1q_f64(w + i);
        float64x2_t war = vmulq_f64(wv, va.val[0]);
        float64x2_t wai = vmulq_f64(wv, va.val[1]);
        re = vfmaq_f64(re, war, vb.val[0]);
        re = vfmaq_f64(re, wai, vb.val[1]);
        im = vfmaq_f64(im, war, vb.val[1]);
        im = vfmsq_f64(im, wai, vb.val[0]);
    }
    double sre = vaddvq_f64(re), sim = vaddvq_f64(im);
    for (; i < n; ++i) {
        const double ar = w[i] * a[i].real(), ai = w[i] * a[i].imag();
        sre += ar * b[i].real() + ai * b[i].imag();
        sim += ar * b[i].imag() - ai * b[i].real();
    }
    return {sre, sim};
}

void cmul_neon(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t va = vld2q_f64(pa + 2 * i);
        float64x2x2_t vb = vld2q_f64(pb + 2 * i);
        float64x2x2_t vo;
        vo.val[0] = vfmsq_f64(vmulq_f64(va.val[0], vb.val[0]), va.val[1], vb.val[1]);
        vo.val[1] = vfmaq_f64(vmulq_f64(va.val[0], vb.val[1]), va.val[1], vb.val[0]);
        vst2q_f64(po + 2 * i, vo);
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_neon(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const float64x2_t cr = vdupq_n_f64(alpha.real());
    const float64x2_t ci = vdupq_n_f64(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t vx = vld2q_f64(px + 2 * i);
        float64x2x2_t vy = vld2q_f64(py + 2 * i);
        vy.val[0] = vfmaq_f64(vfmsq_f64(vy.val[0], ci, vx.val[1]), cr, vx.val[0]);
        vy.val[1] = vfmaq_f64(vfmaq_f64(vy.val[1], ci, vx.val[0]), cr, vx.val[1]);
        vst2q_f64(py + 2 * i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

double wnorm2_neon(const double* w, const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    float64x2_t acc = vdupq_n_f64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t va = vld2q_f64(pa + 2 * i);
        float64x2_t sq = vfmaq_f64(vmulq_f64(va.val[0], va.val[0]), va.val[1], va.val[1]);
        acc = vfmaq_f64(acc, sq, vld1q_f64(w + i));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += w[i] * std::norm(a[i]);
    return s;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

} // namespace pslab::kernels::detail

#endif
