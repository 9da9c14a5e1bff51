#pragma once

#include "sievelab/arith.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace sievelab {

// Smooth compactly supported weights. phi1 vanishes off [1/2, 5] and equals
// its plateau value 2 on [1, 4]; phi2 vanishes off [-10, 10] and equals 2 on
// [-4, 4]. Both are built from sigma(t) = f(t)/(f(t)+f(1-t)), f(t) = e^{-1/t}
// for t > 0, so they are infinitely differentiable.
struct BumpPair {
    std::function<double(double)> phi1;
    std::function<double(double)> phi2;
};

// support bounds shared by every consumer that truncates sums
inline constexpr double kPhi1SupportLo = 0.5;
inline constexpr double kPhi1SupportHi = 5.0;
inline constexpr double kPhi2SupportRadius = 10.0;

BumpPair make_bumps();

// smooth step: 0 for t <= 0, 1 for t >= 1, C-infinity throughout
double smooth_step(double t);

// primes R < p <= 2R with p not dividing the excluded modulus r
struct PrimeWindow {
    double R = 0.0;
    int64_t excluded_modulus = 1;
    std::vector<int64_t> primes;

    PrimeWindow(double R, int64_t r);
    int64_t P() const { return (int64_t)primes.size(); }
};

// nonnegative weights with finite support, stored densely on [lo, hi]
class WeightFunction {
public:
    WeightFunction(int64_t lo, std::vector<double> values);

    int64_t lo() const { return lo_; }
    int64_t hi() const { return lo_ + (int64_t)vals_.size() - 1; }
    double at(int64_t n) const {
        if (n < lo_ || n > hi()) return 0.0;
        return vals_[(size_t)(n - lo_)];
    }
    int64_t max_support_abs() const;  // largest |n| with w(n) != 0, or 0

private:
    int64_t lo_;
    std::vector<double> vals_;
};

struct SieveSides {
    double lhs = 0.0;    // sum_{n >= 1} w(n^2)
    double term1 = 0.0;  // P^{-1} sum_n w(n)
    double term2 = 0.0;  // P^{-2} sum_{p1 != p2} |sum_n w(n) (n/p1p2)|
    bool support_within_eP = true;
};

SieveSides square_sieve_sides(const WeightFunction& w, const PrimeWindow& pw);

// sum over q in Z of Phi1(q^2/Q^2) * sum over a in Z of
// Phi2((a - q^2 b/r)/(Q^2 delta)), truncated exactly to the bump supports
double weighted_count(int64_t b, int64_t r, int64_t Q, double delta,
                      const BumpPair& bumps);

// the arc weight w(n) = Phi1(n/Q^2) * sum_a Phi2((a - n b/r)/(Q^2 delta))
WeightFunction make_arc_weight(int64_t b, int64_t r, int64_t Q, double delta,
                               const BumpPair& bumps);

struct SieveEstimate {
    double estimate = 0.0;  // term1 + term2
    double term1 = 0.0;
    double term2 = 0.0;
    int64_t P = 0;
    bool support_within_eP = true;
};

SieveEstimate sieve_estimate_P(int64_t b, int64_t r, int64_t Q, double delta,
                               double R, const BumpPair& bumps);

struct ChosenR {
    double value = 0.0;
    bool too_small = false;  // below 2: the prime window is likely empty
};

// R = Q^2 sqrt(delta)
ChosenR choose_R(int64_t Q, double delta);

}  // namespace sievelab
