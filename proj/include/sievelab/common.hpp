#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace sievelab {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// e(x) = exp(2*pi*i*x)
inline cplx unit_phase(double x) {
    return {std::cos(kTwoPi * x), std::sin(kTwoPi * x)};
}

// Neumaier-compensated accumulator. Additions happen in a fixed order, so
// results are reproducible run-to-run and independent of thread count as
// long as partial sums are merged in a fixed order.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// splitmix64. The exact sequence is part of the output contract: seeded
// runs must reproduce reports byte for byte, on any platform.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in [0,1), 53 random bits
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
    int next_sign() { return (next() >> 63) ? -1 : 1; }
    // uniform in [0, n)
    uint64_t next_below(uint64_t n) { return next() % n; }
};

}  // namespace sievelab
