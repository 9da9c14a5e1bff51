#include "sievelab/sieve.hpp"

#include "sievelab/common.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sievelab {

double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double f = std::exp(-1.0 / t);
    double g = std::exp(-1.0 / (1.0 - t));
    return f / (f + g);
}

BumpPair make_bumps() {
    BumpPair b;
    b.phi1 = [](double x) {
        return 2.0 * smooth_step(2.0 * (x - 0.5)) * smooth_step(5.0 - x);
    };
    b.phi2 = [](double x) {
        return 2.0 * smooth_step((x + 10.0) / 6.0) * smooth_step((10.0 - x) / 6.0);
    };
    return b;
}

PrimeWindow::PrimeWindow(double R_, int64_t r) : R(R_), excluded_modulus(r) {
    if (!(R > 0.0)) throw std::domain_error("PrimeWindow: R must be positive");
    if (r < 1) throw std::domain_error("PrimeWindow: excluded modulus must be >= 1");
    for (int64_t p : primes_in(R, 2.0 * R))
        if (r % p != 0) primes.push_back(p);
}

WeightFunction::WeightFunction(int64_t lo, std::vector<double> values)
    : lo_(lo), vals_(std::move(values)) {
    if (vals_.empty()) throw std::domain_error("WeightFunction: empty support");
    for (double v : vals_)
        if (!(v >= 0.0)) throw std::domain_error("WeightFunction: weights must be nonnegative");
    if (lo_ <= 0 && hi() >= 0 && vals_[(size_t)(0 - lo_)] != 0.0)
        throw std::domain_error("WeightFunction: w(0) must be zero");
}

int64_t WeightFunction::max_support_abs() const {
    int64_t best = 0;
    for (int64_t n = lo_; n <= hi(); ++n)
        if (at(n) != 0.0) best = std::max(best, n < 0 ? -n : n);
    return best;
}

SieveSides square_sieve_sides(const WeightFunction& w, const PrimeWindow& pw) {
    if (pw.P() == 0) throw std::domain_error("square_sieve_sides: empty prime window");
    SieveSides out;

    // |n| < e^P is the sieve lemma's hypothesis; at desk scale P is small,
    // so this is reported as a flag rather than enforced
    int64_t max_abs = w.max_support_abs();
    out.support_within_eP = max_abs == 0 || std::log((double)max_abs) < (double)pw.P();

    NeumaierSum lhs;
    for (int64_t n = 1; n * n <= w.hi(); ++n) lhs.add(w.at(n * n));
    out.lhs = lhs.value();

    NeumaierSum total;
    for (int64_t n = w.lo(); n <= w.hi(); ++n) total.add(w.at(n));
    out.term1 = total.value() / double(pw.P());

    NeumaierSum pairs;
    for (int64_t p1 : pw.primes) {
        for (int64_t p2 : pw.primes) {
            if (p1 == p2) continue;
            int64_t m = p1 * p2;
            // (n/m) is m-periodic in n; tabulate one period
            std::vector<int> chi((size_t)m);
            for (int64_t k = 0; k < m; ++k) chi[(size_t)k] = jacobi(k, m);
            NeumaierSum inner;
            int64_t k = ((w.lo() % m) + m) % m;
            for (int64_t n = w.lo(); n <= w.hi(); ++n) {
                int c = chi[(size_t)k];
                if (c != 0) inner.add(double(c) * w.at(n));
                if (++k == m) k = 0;
            }
            pairs.add(std::abs(inner.value()));
        }
    }
    out.term2 = pairs.value() / (double(pw.P()) * double(pw.P()));
    return out;
}

namespace {

void validate_arc_args(int64_t b, int64_t r, int64_t Q, double delta) {
    if (r < 1) throw std::domain_error("arc weight: r must be >= 1");
    if (std::gcd(b < 0 ? -b : b, r) != 1)
        throw std::domain_error("arc weight: b and r must be coprime");
    if (Q < 1) throw std::domain_error("arc weight: Q must be >= 1");
    if (!(delta > 0.0) || delta > 1.0)
        throw std::domain_error("arc weight: delta must satisfy 0 < delta <= 1");
}

// sum over a in Z of Phi2((a - center)/(scale)); support |arg| <= 10
double inner_a_sum(const BumpPair& bumps, long double center, double scale) {
    long double radius = (long double)kPhi2SupportRadius * scale;
    int64_t a_lo = (int64_t)std::floor(center - radius) - 1;
    int64_t a_hi = (int64_t)std::ceil(center + radius) + 1;
    NeumaierSum s;
    for (int64_t a = a_lo; a <= a_hi; ++a)
        s.add(bumps.phi2(double(((long double)a - center) / scale)));
    return s.value();
}

}  // namespace

double weighted_count(int64_t b, int64_t r, int64_t Q, double delta,
                      const BumpPair& bumps) {
    validate_arc_args(b, r, Q, delta);
    double q2scale = double(Q) * double(Q);
    double scale = q2scale * delta;
    int64_t q_hi = (int64_t)std::ceil(std::sqrt(kPhi1SupportHi) * double(Q)) + 1;
    NeumaierSum total;
    for (int64_t q = 1; q <= q_hi; ++q) {
        double w1 = bumps.phi1(double(q) * double(q) / q2scale);
        if (w1 == 0.0) continue;
        long double center = (long double)q * q * (long double)b / (long double)r;
        // q and -q contribute identically, so sum once and double
        total.add(2.0 * w1 * inner_a_sum(bumps, center, scale));
    }
    return total.value();
}

WeightFunction make_arc_weight(int64_t b, int64_t r, int64_t Q, double delta,
                               const BumpPair& bumps) {
    validate_arc_args(b, r, Q, delta);
    double q2scale = double(Q) * double(Q);
    double scale = q2scale * delta;
    int64_t n_lo = (int64_t)std::floor(kPhi1SupportLo * q2scale);
    int64_t n_hi = (int64_t)std::ceil(kPhi1SupportHi * q2scale);
    n_lo = std::max<int64_t>(n_lo, 1);
    std::vector<double> vals((size_t)(n_hi - n_lo + 1), 0.0);
    for (int64_t n = n_lo; n <= n_hi; ++n) {
        double w1 = bumps.phi1(double(n) / q2scale);
        if (w1 == 0.0) continue;
        long double center = (long double)n * (long double)b / (long double)r;
        vals[(size_t)(n - n_lo)] = w1 * inner_a_sum(bumps, center, scale);
    }
    return WeightFunction(n_lo, std::move(vals));
}

SieveEstimate sieve_estimate_P(int64_t b, int64_t r, int64_t Q, double delta,
                               double R, const BumpPair& bumps) {
    PrimeWindow pw(R, r);
    if (pw.P() == 0) throw std::domain_error("sieve_estimate_P: empty prime window");
    WeightFunction w = make_arc_weight(b, r, Q, delta, bumps);
    SieveSides sides = square_sieve_sides(w, pw);
    SieveEstimate est;
    est.term1 = sides.term1;
    est.term2 = sides.term2;
    est.estimate = sides.term1 + sides.term2;
    est.P = pw.P();
    est.support_within_eP = sides.support_within_eP;
    return est;
}

ChosenR choose_R(int64_t Q, double delta) {
    if (Q < 1) throw std::domain_error("choose_R: Q must be >= 1");
    if (!(delta > 0.0) || delta > 1.0)
        throw std::domain_error("choose_R: delta must satisfy 0 < delta <= 1");
    ChosenR out;
    out.value = double(Q) * double(Q) * std::sqrt(delta);
    out.too_small = out.value < 2.0;
    return out;
}

}  // namespace sievelab
