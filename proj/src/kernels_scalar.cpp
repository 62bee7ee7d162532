#include "pslab/kernels.hpp"

namespace pslab::kernels::detail {

cplx cdot_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0, im = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

cplx wcdot_scalar(const double* w, const cplx* a, const cplx* b, std::size_t n) {
    double re = 0, im = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += w[i] * (ar * br + ai * bi);
        im += w[i] * (ar * bi - ai * br);
    }
    return {re, im};
}

void cmul_scalar(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        out[i] = {ar * br - ai * bi, ar * bi + ai * br};
    }
}

void axpy_scalar(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
    const double cr = alpha.real(), ci = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cplx{cr * xr - ci * xi, cr * xi + ci * xr};
    }
}

double wnorm2_scalar(const double* w, const cplx* a, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
        s += w[i] * (a[i].real() * a[i].real() + a[i].imag() * a[i].imag());
    return s;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

} // namespace pslab::kernels::detail
