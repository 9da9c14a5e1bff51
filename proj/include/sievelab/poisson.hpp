#pragma once

#include "sievelab/arith.hpp"
#include "sievelab/common.hpp"
#include "sievelab/sieve.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

namespace sievelab {

// The modulus data of the residue splitting n = f + m x1, m = p1 p2 r,
// together with the scaled parameters of the two-dimensional sum.
struct ModulusSplit {
    int64_t p1, p2;  // distinct odd primes
    int64_t r;       // coprime to p1*p2
    int64_t b;       // coprime to r
    int64_t Q;
    double delta;

    ModulusSplit(int64_t p1, int64_t p2, int64_t r, int64_t b, int64_t Q, double delta);

    int64_t m() const { return p1 * p2 * r; }
    double alpha1() const { return 1.0 / (double(Q) * double(Q)); }
    double beta2() const { return 1.0 / (double(Q) * double(Q) * delta); }
    double alpha2() const { return -double(b) / (double(r) * double(Q) * double(Q) * delta); }
};

// Fourier transform convention: hat(t) = integral Phi(x) e(-t x) dx.
// Values are computed by adaptive quadrature and cached; the cache is
// read-mostly: warm it up (or synchronize externally) before concurrent use.
class FourierTable {
public:
    enum class Fn { phi1, phi2 };

    explicit FourierTable(BumpPair bumps, double quad_tol = 1e-10);

    cplx hat(Fn fn, double t) const;
    double abs_hat(Fn fn, double t) const;

    // |hat(t)| <= hat(0) for every t, since the bumps are nonnegative
    double hat_max(Fn fn) const;

    // measured quartic decay envelope: |hat(t)| <= envelope_A / t^4 for
    // t >= 1 (constant taken from a sample grid, with a safety factor)
    double envelope_A(Fn fn) const;

    // |t| beyond which the measured |hat| stays below eps
    double decay_radius(Fn fn, double eps) const;

    double quad_tol() const { return tol_; }

private:
    void measure(Fn fn) const;

    BumpPair bumps_;
    double tol_;
    mutable std::map<std::pair<int, uint64_t>, cplx> cache_;
    mutable bool measured_[2] = {false, false};
    mutable std::vector<double> samples_[2];  // |hat| on the measurement grid
    mutable double envelope_[2] = {0.0, 0.0};
};

// hat of an arbitrary compactly supported function, adaptive quadrature to
// absolute tolerance tol; throws if the error estimate cannot be met
cplx fourier_hat(const std::function<double(double)>& bump, double lo, double hi,
                 double t, double tol);

struct PoissonCheck {
    double direct = 0.0;  // lattice sum of Phi(x1, x2)
    cplx dual{0.0, 0.0};  // truncated sum of hat(t1, t2)
    double gap = 0.0;     // |direct - dual|
    double tail = 0.0;    // bound on the neglected dual terms
};

// Both sides of two-dimensional Poisson summation for the residue class f,
//   Phi(x1,x2) = Phi1(alpha1 (f + m x1)) Phi2(beta2 x2 + alpha2 (f + m x1)),
// with dual terms
//   (Q^4 delta / m) e(f t1 / m) Phi1hat((t1 + t2 b p1 p2) Q^2 / m)
//                               Phi2hat(t2 Q^2 delta),
// truncated to |t1|, |t2| <= trunc.
PoissonCheck poisson_check(const ModulusSplit& ms, int64_t f, double trunc,
                           double tol, const FourierTable& ft);

// a truncation radius large enough that the neglected terms fall under the
// measured decay threshold eps
double suggest_trunc(const ModulusSplit& ms, const FourierTable& ft, double eps);

struct CharSumPair {
    cplx lhs;  // direct sum over f = 1..m of (f/p1p2) e((s - c b p1 p2) f / m)
    cplx rhs;  // r * tau_{p1p2} * (rs/p1p2) when c p1 p2 = s bbar (mod r), else 0
};

CharSumPair charsum_identity(const ModulusSplit& ms, int64_t s, int64_t c);

struct DualSideBound {
    double value = 0.0;  // (Q^4 delta / sqrt(p1 p2)) * truncated |hat1 * hat2| sum
    double tail = 0.0;   // bound on the omitted congruence-class terms
};

// the congruence-constrained double sum over |c| <= T/(Q^2 delta) and
// |s| <= T p1 p2 r / Q^2 with c p1 p2 = s bbar (mod r)
DualSideBound dual_side_bound(const ModulusSplit& ms, double T, const FourierTable& ft);

// sum_n Phi1(n/Q^2) (n/p1p2) sum_a Phi2((a - b n / r)/(Q^2 delta)),
// by direct summation; the object the dual side bounds from above
double character_twisted_arc_sum(const ModulusSplit& ms, const BumpPair& bumps);

struct PairSumChain {
    double total = 0.0;  // sum of dual_side_bound over ordered prime pairs
    double tail = 0.0;
    int64_t P = 0;
    // reference magnitudes of the closing chain, epsilon factor fixed to 1
    double q4dR = 0.0;        // Q^4 delta R
    double q2dR3 = 0.0;       // Q^2 delta R^3
    double R3 = 0.0;          // R^3
    double q4d_over_R = 0.0;  // Q^4 delta / R
    double final_combo = 0.0; // Q^2 sqrt(delta) + Q^4 delta^{3/2}
};

PairSumChain pair_sum_chain(int64_t Q, double delta, int64_t b, int64_t r, double R,
                            double T, const FourierTable& ft);

}  // namespace sievelab
