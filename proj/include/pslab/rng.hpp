#pragma once

#include <cstdint>
#include <complex>

namespace pslab {

// Deterministic generator (splitmix64 core) so that identical (config, seed)
// reproduce identical draws independent of the standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

    // standard normal via Box-Muller (no cached spare, keeps state simple)
    double normal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    std::complex<double> cnormal() { return {normal(), normal()}; }

    // independent stream for a named sub-task
    Rng fork(std::uint64_t tag) { return Rng(next_u64() ^ (tag * 0x9e3779b97f4a7c15ULL)); }

  private:
    std::uint64_t state_;
};

} // namespace pslab
