#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Hand-written inner loops for the quadrature layer. Every kernel has a
// scalar reference implementation and, where the host supports it, a SIMD
// variant (AVX2+FMA on x86-64, NEON on aarch64). The active variant is
// selected once at startup from CPU features; tests pin the path explicitly
// and check scalar/SIMD agreement.

namespace pslab::kernels {

using cplx = std::complex<double>;

enum class Path { scalar, avx2, neon };

// Path selected for this process (scalar unless the CPU supports better).
Path active_path();
std::string path_name(Path p);

// Override the dispatch. Requesting an unsupported path is an error.
void force_path(Path p);

// sum_i conj(a_i) * b_i
cplx cdot(const cplx* a, const cplx* b, std::size_t n);

// sum_i w_i * conj(a_i) * b_i  (quadrature inner product on sample arrays)
cplx wcdot(const double* w, const cplx* a, const cplx* b, std::size_t n);

// out_i = a_i * b_i (elementwise; used to apply diagonal multipliers)
void cmul(cplx* out, const cplx* a, const cplx* b, std::size_t n);

// y_i += alpha * x_i
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n);

// sum_i w_i * |a_i|^2
double wnorm2(const double* w, const cplx* a, std::size_t n);

// sum_i a_i * b_i for real arrays
double dot(const double* a, const double* b, std::size_t n);

namespace detail {
cplx cdot_scalar(const cplx*, const cplx*, std::size_t);
cplx wcdot_scalar(const double*, const cplx*, const cplx*, std::size_t);
void cmul_scalar(cplx*, const cplx*, const cplx*, std::size_t);
void axpy_scalar(cplx*, cplx, const cplx*, std::size_t);
double wnorm2_scalar(const double*, const cplx*, std::size_t);
double dot_scalar(const double*, const double*, std::size_t);

#if defined(__x86_64__) || defined(_M_X64)
cplx cdot_avx2(const cplx*, const cplx*, std::size_t);
cplx wcdot_avx2(const double*, const cplx*, const cplx*, std::size_t);
void cmul_avx2(cplx*, const cplx*, const cplx*, std::size_t);
void axpy_avx2(cplx*, cplx, const cplx*, std::size_t);
double wnorm2_avx2(const double*, const cplx*, std::size_t);
double dot_avx2(const double*, const double*, std::size_t);
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
cplx cdot_neon(const cplx*, const cplx*, std::size_t);
cplx wcdot_neon(const double*, const cplx*, const cplx*, std::size_t);
void cmul_neon(cplx*, const cplx*, const cplx*, std::size_t);
void axpy_neon(cplx*, cplx, const cplx*, std::size_t);
double wnorm2_neon(const double*, const cplx*, std::size_t);
double dot_neon(const double*, const double*, std::size_t);
#endif
} // namespace detail

} // namespace pslab::kernels
