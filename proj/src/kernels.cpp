#include "pslab/kernels.hpp"

#include <stdexcept>

namespace pslab::kernels {

namespace {

struct Vtable {
    cplx (*cdot)(const cplx*, const cplx*, std::size_t);
    cplx (*wcdot)(const double*, const cplx*, const cplx*, std::size_t);
    void (*cmul)(cplx*, const cplx*, const cplx*, std::size_t);
    void (*axpy)(cplx*, cplx, const cplx*, std::size_t);
    double (*wnorm2)(const double*, const cplx*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
};

constexpr Vtable k_scalar{detail::cdot_scalar, detail::wcdot_scalar, detail::cmul_scalar,
                          detail::axpy_scalar, detail::wnorm2_scalar, detail::dot_scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable k_avx2{detail::cdot_avx2, detail::wcdot_avx2, detail::cmul_avx2,
                        detail::axpy_avx2, detail::wnorm2_avx2, detail::dot_avx2};
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
constexpr Vtable k_neon{detail::cdot_neon, detail::wcdot_neon, detail::cmul_neon,
                        detail::axpy_neon, detail::wnorm2_neon, detail::dot_neon};
#endif

bool path_supported(Path p) {
    switch (p) {
        case Path::scalar: return true;
        case Path::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Path::neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Path detect_path() {
#if defined(__ARM_NEON) || defined(__aarch64__)
    return Path::neon;
#else
    return path_supported(Path::avx2) ? Path::avx2 : Path::scalar;
#endif
}

const Vtable& table_for(Path p) {
    switch (p) {
#if defined(__x86_64__) || defined(_M_X64)
        case Path::avx2: return k_avx2;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
        case Path::neon: return k_neon;
#endif
        default: return k_scalar;
    }
}

Path g_path = detect_path();
const Vtable* g_vt = &table_for(detect_path());

} // namespace

Path active_path() { return g_path; }

std::string path_name(Path p) {
    switch (p) {
        case Path::scalar: return "scalar";
        case Path::avx2: return "avx2";
        case Path::neon: return "neon";
    }
    return "?";
}

void force_path(Path p) {
    if (!path_supported(p))
        throw std::runtime_error("kernel path not supported on this host: " + path_name(p));
    g_path = p;
    g_vt = &table_for(p);
}

cplx cdot(const cplx* a, const cplx* b, std::size_t n) { return g_vt->cdot(a, b, n); }
cplx wcdot(const double* w, const cplx* a, const cplx* b, std::size_t n) { return g_vt->wcdot(w, a, b, n); }
void cmul(cplx* out, const cplx* a, const cplx* b, std::size_t n) { g_vt->cmul(out, a, b, n); }
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) { g_vt->axpy(y, alpha, x, n); }
double wnorm2(const double* w, const cplx* a, std::size_t n) { return g_vt->wnorm2(w, a, n); }
double dot(const double* a, const double* b, std::size_t n) { return g_vt->dot(a, b, n); }

} // namespace pslab::kernels
