#include "sievelab/farey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sievelab {

namespace {

// Q^3-sized enumerations stop being desk scale past this point
constexpr int64_t kMaxQ = 512;

constexpr long double kGuard = 1e-15L;

void validate_window(int64_t Q, double delta) {
    if (Q < 1) throw std::domain_error("count_P: Q must be >= 1");
    if (Q > kMaxQ) throw std::domain_error("count_P: Q > 512 refused (enumeration too large)");
    if (!(delta > 0.0) || delta > 1.0)
        throw std::domain_error("count_P: delta must satisfy 0 < delta <= 1");
}

}  // namespace

CountWindow CountWindow::at(double alpha, int64_t Q, double delta) {
    validate_window(Q, delta);
    CountWindow w;
    w.Q = Q;
    w.delta = delta;
    w.rational = false;
    w.alpha_real = alpha;
    return w;
}

CountWindow CountWindow::at(const ReducedFraction& alpha, int64_t Q, double delta) {
    validate_window(Q, delta);
    CountWindow w;
    w.Q = Q;
    w.delta = delta;
    w.rational = true;
    w.alpha_rat = alpha;
    return w;
}

CountResult count_P(const CountWindow& w) {
    CountResult res;
    long double delta = w.delta;
    long double alpha = w.rational ? (long double)w.alpha_rat.num / (long double)w.alpha_rat.den
                                   : (long double)w.alpha_real;
    for (int64_t q = w.Q + 1; q <= 2 * w.Q; ++q) {
        int64_t d = q * q;
        // only a near d*alpha can satisfy |a/d - alpha| <= delta; the exact
        // test below re-filters, so the +-2 margin just has to cover rounding
        long double lo = (long double)d * (alpha - delta);
        long double hi = (long double)d * (alpha + delta);
        int64_t a_lo = std::max<int64_t>(1, (int64_t)std::floor(lo) - 2);
        int64_t a_hi = std::min<int64_t>(d, (int64_t)std::ceil(hi) + 2);
        for (int64_t a = a_lo; a <= a_hi; ++a) {
            if (std::gcd(a, q) != 1) continue;
            bool in;
            long double closeness;  // |distance| - delta, in comparable units
            if (w.rational) {
                // |a/d - u/v| <= delta  <=>  |a*v - u*d| <= delta*d*v, exactly
                __int128 diff = (__int128)a * w.alpha_rat.den - (__int128)w.alpha_rat.num * d;
                long double lhs = diff < 0 ? -(long double)diff : (long double)diff;
                long double rhs = delta * (long double)d * (long double)w.alpha_rat.den;
                in = lhs <= rhs;
                closeness = std::fabs(lhs - rhs) / std::max<long double>(rhs, 1.0L);
            } else {
                long double dist = std::fabs((long double)a / (long double)d - alpha);
                in = dist <= delta;
                closeness = std::fabs(dist - delta) / std::max<long double>(delta, 1e-300L);
            }
            if (in) {
                ++res.count;
                if (closeness <= kGuard) ++res.near_boundary;
            } else if (closeness <= kGuard) {
                ++res.near_boundary;
            }
        }
    }
    return res;
}

MaxPResult max_P_over_alpha(int64_t Q, double delta) {
    validate_window(Q, delta);
    // all points a/q^2 in scope, as long doubles; distinct reduced fractions
    // with denominators <= (2*512)^2 stay separated well above the 64-bit
    // mantissa resolution
    std::vector<long double> pts;
    for (int64_t q = Q + 1; q <= 2 * Q; ++q) {
        int64_t d = q * q;
        for (int64_t a = 1; a <= d; ++a)
            if (std::gcd(a, q) == 1) pts.push_back((long double)a / (long double)d);
    }
    std::sort(pts.begin(), pts.end());

    MaxPResult best;
    long double width = 2.0L * (long double)delta;
    size_t j = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (j < i) j = i;
        while (j + 1 < pts.size() && pts[j + 1] - pts[i] <= width) ++j;
        int64_t count = (int64_t)(j - i + 1);
        if (count > best.count) {
            best.count = count;
            best.witness = double((pts[i] + pts[j]) / 2.0L);
        }
        if (j + 1 < pts.size()) {
            long double slack = pts[j + 1] - pts[i] - width;
            if (std::fabs(slack) <= kGuard * std::max<long double>(width, 1e-300L))
                ++best.near_boundary;
        }
    }
    return best;
}

int64_t major_arc_vmax(const MajorArcParams& p) {
    if (p.Q < 1) throw std::domain_error("major_arc_vmax: Q must be >= 1");
    if (!(p.delta > 0.0)) throw std::domain_error("major_arc_vmax: delta must be positive");
    long double bound = 1.0L / (500.0L * (long double)p.Q * (long double)p.Q * (long double)p.delta);
    if (bound < 1.0L) return 0;
    return (int64_t)std::floor(bound);
}

std::optional<std::pair<int64_t, int64_t>> in_major_arc(double alpha,
                                                        const MajorArcParams& p) {
    int64_t vmax = major_arc_vmax(p);
    long double q2 = (long double)p.Q * (long double)p.Q;
    for (int64_t v = 1; v <= vmax; ++v) {
        long double radius = 1.0L / (10.0L * q2 * (long double)v);
        int64_t u0 = (int64_t)std::llround((long double)alpha * (long double)v);
        for (int64_t u = u0 - 1; u <= u0 + 1; ++u) {
            if (std::gcd(u < 0 ? -u : u, v) != 1) continue;
            long double dist = std::fabs((long double)u / (long double)v - (long double)alpha);
            if (dist <= radius) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

std::pair<int64_t, int64_t> dirichlet_approx(double alpha, int64_t limit) {
    if (limit < 1) throw std::domain_error("dirichlet_approx: limit must be >= 1");
    // continued-fraction convergents of alpha; the last convergent with
    // denominator <= limit satisfies |alpha - h/k| < 1/(k * limit)
    long double x = alpha;
    int64_t h_prev = 1, k_prev = 0;
    int64_t a0 = (int64_t)std::floor(x);
    int64_t h = a0, k = 1;
    long double frac = x - (long double)a0;
    for (int iter = 0; iter < 64; ++iter) {
        if (frac <= 1e-18L) break;
        x = 1.0L / frac;
        int64_t ai = (int64_t)std::floor(x);
        frac = x - (long double)ai;
        if (ai > (std::numeric_limits<int64_t>::max() - k_prev) / std::max<int64_t>(k, 1)) break;
        int64_t k_next = ai * k + k_prev;
        if (k_next > limit || k_next <= 0) break;
        int64_t h_next = ai * h + h_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    int64_t g = std::gcd(h < 0 ? -h : h, k);
    if (g > 1) {
        h /= g;
        k /= g;
    }
    long double err = std::fabs((long double)h / (long double)k - (long double)alpha);
    long double contract = 1.0L / ((long double)k * (long double)limit);
    if (err <= contract * (1.0L + 1e-12L)) return {h, k};
    // floating-point corner: scan denominators directly (Dirichlet's theorem
    // guarantees a solution)
    for (int64_t r = 1; r <= limit; ++r) {
        int64_t b = (int64_t)std::llround((long double)alpha * (long double)r);
        if (std::gcd(b < 0 ? -b : b, r) != 1) continue;
        long double e = std::fabs((long double)b / (long double)r - (long double)alpha);
        if (e <= 1.0L / ((long double)r * (long double)limit) * (1.0L + 1e-12L)) return {b, r};
    }
    throw std::runtime_error("dirichlet_approx: no admissible pair found");
}

std::optional<std::pair<int64_t, int64_t>> refine_approx(double alpha, int64_t Q,
                                                         double delta) {
    if (Q < 1) throw std::domain_error("refine_approx: Q must be >= 1");
    if (!(delta > 0.0) || delta > 1.0)
        throw std::domain_error("refine_approx: delta must satisfy 0 < delta <= 1");
    if (in_major_arc(alpha, MajorArcParams{Q, delta})) return std::nullopt;
    int64_t limit = 500 * Q * Q;
    auto [b, r] = dirichlet_approx(alpha, limit);
    // a minor-arc alpha forces r past the major-arc modulus range, and the
    // Dirichlet error is then below delta
    long double vbound = 1.0L / (500.0L * (long double)Q * (long double)Q * (long double)delta);
    if ((long double)r <= vbound)
        throw std::runtime_error("refine_approx: r within major-arc modulus range");
    long double err = std::fabs((long double)b / (long double)r - (long double)alpha);
    if (err > (long double)delta * (1.0L + 1e-12L))
        throw std::runtime_error("refine_approx: approximation error exceeds delta");
    return std::make_pair(b, r);
}

ReducedFraction farey_spacing_check(int64_t Q, int64_t d) {
    if (Q < 1 || d < 1) throw std::domain_error("farey_spacing_check: Q, d must be >= 1");
    int64_t q2 = Q * Q;
    int64_t n_lo = (q2 + 2 * d - 1) / (2 * d);  // ceil(Q^2 / (2d))
    int64_t n_hi = (5 * q2) / d;                // floor(5 Q^2 / d)
    if (n_lo > n_hi) throw std::domain_error("farey_spacing_check: empty denominator range");

    struct Frac {
        int64_t a, n;
    };
    std::vector<Frac> fr;
    for (int64_t n = n_lo; n <= n_hi; ++n)
        for (int64_t a = 0; a <= n; ++a)
            if (std::gcd(a, n) == 1) fr.push_back({a, n});
    std::sort(fr.begin(), fr.end(), [](const Frac& x, const Frac& y) {
        return (__int128)x.a * y.n < (__int128)y.a * x.n;
    });

    bool have = false;
    ReducedFraction best;
    for (size_t i = 0; i + 1 < fr.size(); ++i) {
        __int128 num = (__int128)fr[i + 1].a * fr[i].n - (__int128)fr[i].a * fr[i + 1].n;
        if (num == 0) continue;  // same value, distinct (a, n) cannot happen for reduced fractions
        int64_t den = fr[i].n * fr[i + 1].n;
        ReducedFraction gap((int64_t)num, den);
        if (!have || gap.compare(best) < 0) {
            best = gap;
            have = true;
        }
    }
    if (!have) throw std::domain_error("farey_spacing_check: fewer than two fractions in range");
    return best;
}

}  // namespace sievelab
