#pragma once

#include <cstdint>
#include <random>

namespace peelkit {

// Deterministic RNG wrapper. mt19937_64 output is pinned by the C++ standard,
// so the same seed gives the same stream on every platform. Uniform doubles
// are rolled by hand (53-bit mantissa) instead of std::*_distribution, whose
// output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform in (0,1) — safe for logs
    double uniform_pos() {
        double u;
        do { u = uniform(); } while (u == 0.0);
        return u;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // rejection to avoid modulo bias
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 eng_;
};

// SplitMix64 finalizer; used to derive independent child seeds from
// (master seed, index) so replicate streams do not depend on scheduling.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

} // namespace peelkit
