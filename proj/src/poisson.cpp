#include "sievelab/poisson.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sievelab {

namespace {

bool is_odd_prime(int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

int64_t floor_mod128(__int128 a, int64_t m) {
    __int128 r = a % m;
    if (r < 0) r += m;
    return (int64_t)r;
}

// measurement grid for decay envelopes and radii
constexpr double kMeasureStep = 0.25;
constexpr double kMeasureMax = 160.0;

// sum over one lattice axis of the quartic envelope beyond index K:
// 2 A / h^4 * sum_{k > K} k^{-4} <= 2 A / (3 h^4 K^3)
double quartic_tail(double A, double h, int64_t K) {
    if (K < 1) K = 1;
    return 2.0 * A / (3.0 * h * h * h * h * double(K) * double(K) * double(K));
}

}  // namespace

ModulusSplit::ModulusSplit(int64_t p1_, int64_t p2_, int64_t r_, int64_t b_, int64_t Q_,
                           double delta_)
    : p1(p1_), p2(p2_), r(r_), b(b_), Q(Q_), delta(delta_) {
    if (!is_odd_prime(p1) || !is_odd_prime(p2))
        throw std::domain_error("ModulusSplit: p1, p2 must be odd primes");
    if (p1 == p2) throw std::domain_error("ModulusSplit: p1, p2 must be distinct");
    if (r < 1) throw std::domain_error("ModulusSplit: r must be >= 1");
    if (r % p1 == 0 || r % p2 == 0)
        throw std::domain_error("ModulusSplit: r must be coprime to p1*p2");
    if (std::gcd(b < 0 ? -b : b, r) != 1)
        throw std::domain_error("ModulusSplit: b must be coprime to r");
    if (Q < 1) throw std::domain_error("ModulusSplit: Q must be >= 1");
    if (!(delta > 0.0) || delta > 1.0)
        throw std::domain_error("ModulusSplit: delta must satisfy 0 < delta <= 1");
}

namespace {

// 16-point Gauss-Legendre on [-1, 1], positive abscissas
constexpr double kGlNode[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGlWeight[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

cplx gl_composite(const std::function<double(double)>& bump, double lo, double hi,
                  double t, int panels) {
    double w = (hi - lo) / panels;
    cplx acc{0.0, 0.0};
    for (int i = 0; i < panels; ++i) {
        double mid = lo + (double(i) + 0.5) * w;
        double half = 0.5 * w;
        cplx panel{0.0, 0.0};
        for (int k = 0; k < 8; ++k) {
            double xl = mid - half * kGlNode[k];
            double xr = mid + half * kGlNode[k];
            double vl = bump(xl);
            double vr = bump(xr);
            cplx s{0.0, 0.0};
            if (vl != 0.0) s += vl * unit_phase(-t * xl);
            if (vr != 0.0) s += vr * unit_phase(-t * xr);
            panel += kGlWeight[k] * s;
        }
        acc += half * panel;
    }
    return acc;
}

}  // namespace

cplx fourier_hat(const std::function<double(double)>& bump, double lo, double hi,
                 double t, double tol) {
    if (!(hi > lo)) throw std::domain_error("fourier_hat: empty support");
    if (!(tol > 0.0)) throw std::domain_error("fourier_hat: tol must be positive");
    // about 4/3 oscillation periods per 16-point panel already puts the
    // panel error near machine precision; the coarse/fine pair verifies it
    int panels = (int)std::clamp(std::ceil((hi - lo) * std::max(1.0, 0.75 * std::abs(t))),
                                 2.0, 4.0e6);
    cplx coarse = gl_composite(bump, lo, hi, t, panels);
    for (int round = 0; round < 5; ++round) {
        int fine_panels = panels * 3 / 2 + 1;
        cplx fine = gl_composite(bump, lo, hi, t, fine_panels);
        if (std::abs(fine - coarse) <= tol) return fine;
        panels = 2 * panels;
        coarse = gl_composite(bump, lo, hi, t, panels);
        if (std::abs(fine - coarse) <= tol) return coarse;
    }
    std::ostringstream msg;
    msg << "fourier_hat: quadrature did not converge at t = " << t << " (requested tol "
        << tol << ")";
    throw std::runtime_error(msg.str());
}

FourierTable::FourierTable(BumpPair bumps, double quad_tol)
    : bumps_(std::move(bumps)), tol_(quad_tol) {
    if (!(tol_ > 0.0)) throw std::domain_error("FourierTable: tolerance must be positive");
}

cplx FourierTable::hat(Fn fn, double t) const {
    auto key = std::make_pair((int)fn, std::bit_cast<uint64_t>(t));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    cplx v = fn == Fn::phi1
                 ? fourier_hat(bumps_.phi1, kPhi1SupportLo, kPhi1SupportHi, t, tol_)
                 : fourier_hat(bumps_.phi2, -kPhi2SupportRadius, kPhi2SupportRadius, t, tol_);
    cache_.emplace(key, v);
    return v;
}

double FourierTable::abs_hat(Fn fn, double t) const { return std::abs(hat(fn, t)); }

double FourierTable::hat_max(Fn fn) const { return std::abs(hat(fn, 0.0)); }

void FourierTable::measure(Fn fn) const {
    int idx = (int)fn;
    if (measured_[idx]) return;
    size_t n = (size_t)std::llround(kMeasureMax / kMeasureStep) + 1;
    auto& samples = samples_[idx];
    samples.resize(n);
    double A = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double t = double(i) * kMeasureStep;
        samples[i] = abs_hat(fn, t);
        if (t >= 1.0) A = std::max(A, samples[i] * t * t * t * t);
    }
    envelope_[idx] = 2.0 * A;  // safety factor for values between grid points
    measured_[idx] = true;
}

double FourierTable::envelope_A(Fn fn) const {
    measure(fn);
    return envelope_[(int)fn];
}

double FourierTable::decay_radius(Fn fn, double eps) const {
    if (!(eps > 0.0)) throw std::domain_error("decay_radius: eps must be positive");
    measure(fn);
    const auto& samples = samples_[(int)fn];
    // smallest grid point beyond which all measured values stay under eps/2
    double radius = kMeasureMax;
    double suffix = 0.0;
    for (size_t i = samples.size(); i-- > 0;) {
        suffix = std::max(suffix, samples[i]);
        if (suffix >= 0.5 * eps) break;
        radius = double(i) * kMeasureStep;
    }
    return std::max(radius, 1.0);
}

PoissonCheck poisson_check(const ModulusSplit& ms, int64_t f, double trunc, double tol,
                           const FourierTable& ft) {
    if (f < 1 || f > ms.m()) throw std::domain_error("poisson_check: f must lie in [1, m]");
    if (!(trunc > 0.0)) throw std::domain_error("poisson_check: trunc must be positive");
    if (!(tol > 0.0)) throw std::domain_error("poisson_check: tol must be positive");
    BumpPair bumps = make_bumps();
    double a1 = ms.alpha1();
    double b2 = ms.beta2();
    double a2 = ms.alpha2();
    int64_t m = ms.m();
    double q2 = double(ms.Q) * double(ms.Q);

    PoissonCheck out;

    // direct lattice sum over the finite support
    {
        NeumaierSum direct;
        double g_lo = kPhi1SupportLo * q2;
        double g_hi = kPhi1SupportHi * q2;
        int64_t x1_lo = (int64_t)std::floor((g_lo - double(f)) / double(m)) - 1;
        int64_t x1_hi = (int64_t)std::ceil((g_hi - double(f)) / double(m)) + 1;
        for (int64_t x1 = x1_lo; x1 <= x1_hi; ++x1) {
            double g = double(f + m * x1);
            double w1 = bumps.phi1(a1 * g);
            if (w1 == 0.0) continue;
            double center = a2 * g;
            int64_t x2_lo = (int64_t)std::floor((-kPhi2SupportRadius - center) / b2) - 1;
            int64_t x2_hi = (int64_t)std::ceil((kPhi2SupportRadius - center) / b2) + 1;
            for (int64_t x2 = x2_lo; x2 <= x2_hi; ++x2)
                direct.add(w1 * bumps.phi2(b2 * double(x2) + center));
        }
        out.direct = direct.value();
    }

    // dual side, enumerated where the transforms are above the skip level
    double eps = std::clamp(tol * 1e-3, 1e-15, 1e-9);
    double pref = 1.0 / (b2 * a1 * double(m));  // = Q^4 delta / m
    double h2 = 1.0 / b2;                        // arg2 spacing over t2
    double h1 = q2 / double(m);                  // arg1 spacing over t1
    double rad1 = ft.decay_radius(FourierTable::Fn::phi1, eps);
    double rad2 = ft.decay_radius(FourierTable::Fn::phi2, eps);
    double max1 = ft.hat_max(FourierTable::Fn::phi1);
    double max2 = ft.hat_max(FourierTable::Fn::phi2);
    double A1 = ft.envelope_A(FourierTable::Fn::phi1);
    double A2 = ft.envelope_A(FourierTable::Fn::phi2);

    int64_t T = (int64_t)std::floor(trunc);
    int64_t t2_rad = (int64_t)std::floor(rad2 / h2);
    int64_t t2_cap = std::min(T, t2_rad);
    int64_t w1_half = (int64_t)std::ceil(rad1 / h1);
    int64_t t1_meas = (int64_t)std::floor(kMeasureMax / h1);
    int64_t t2_meas = (int64_t)std::floor(kMeasureMax / h2);
    int64_t bp = ms.b * ms.p1 * ms.p2;

    cplx dual{0.0, 0.0};
    double sum_abs2 = 0.0;
    NeumaierSum tail;

    // terms with |t2| beyond the enumerated cap
    if (t2_cap < t2_rad)  // trunc clipped values that are not yet small
        tail.add(double(2 * (t2_rad - t2_cap)) * max2 *
                 (max1 * double(2 * w1_half + 1) + quartic_tail(A1, h1, t1_meas)));
    double beyond2 = double(std::max<int64_t>(t2_meas - t2_rad, 0)) * eps +
                     quartic_tail(A2, h2, std::max<int64_t>(t2_meas, 1));
    tail.add(beyond2 * (max1 * double(2 * w1_half + 1) + quartic_tail(A1, h1, t1_meas)));

    for (int64_t t2 = -t2_cap; t2 <= t2_cap; ++t2) {
        cplx w2 = ft.hat(FourierTable::Fn::phi2, double(t2) * h2);
        double w2abs = std::abs(w2);
        sum_abs2 += w2abs;
        int64_t center = -t2 * bp;
        int64_t lo = std::max(center - w1_half, -T);
        int64_t hi = std::min(center + w1_half, T);
        // t1 values inside the decay window but clipped away by trunc
        int64_t clipped = (2 * w1_half + 1) - std::max<int64_t>(hi - lo + 1, 0);
        if (clipped > 0) tail.add(w2abs * double(clipped) * max1);
        for (int64_t t1 = lo; t1 <= hi; ++t1) {
            cplx w1 = ft.hat(FourierTable::Fn::phi1, double(t1 - center) * h1);
            int64_t ph = floor_mod128((__int128)f * t1, m);
            dual += w1 * w2 * unit_phase(double(ph) / double(m));
        }
        // t1 tail beyond the decay window
        tail.add(w2abs * (double(std::max<int64_t>(t1_meas - w1_half, 0)) * eps +
                          quartic_tail(A1, h1, std::max(t1_meas, w1_half))));
    }

    out.dual = pref * dual;
    out.gap = std::abs(out.direct - out.dual);
    out.tail = pref * tail.value();
    return out;
}

double suggest_trunc(const ModulusSplit& ms, const FourierTable& ft, double eps) {
    double q2 = double(ms.Q) * double(ms.Q);
    double h2 = q2 * ms.delta;
    double h1 = q2 / double(ms.m());
    double rad1 = ft.decay_radius(FourierTable::Fn::phi1, eps);
    double rad2 = ft.decay_radius(FourierTable::Fn::phi2, eps);
    double t2_cap = std::ceil(rad2 / h2);
    double t1_cap = t2_cap * std::abs(double(ms.b)) * double(ms.p1) * double(ms.p2) +
                    std::ceil(rad1 / h1);
    return std::max(t1_cap, t2_cap) + 2.0;
}

CharSumPair charsum_identity(const ModulusSplit& ms, int64_t s, int64_t c) {
    int64_t m = ms.m();
    int64_t pp = ms.p1 * ms.p2;
    int64_t mult = floor_mod128((__int128)s - (__int128)c * ms.b * pp, m);

    std::vector<int> chi((size_t)pp);
    for (int64_t k = 0; k < pp; ++k) chi[(size_t)k] = jacobi(k, pp);
    std::vector<cplx> tw((size_t)m);
    for (int64_t k = 0; k < m; ++k) tw[(size_t)k] = unit_phase(double(k) / double(m));

    cplx lhs{0.0, 0.0};
    for (int64_t f = 1; f <= m; ++f) {
        int ch = chi[(size_t)(f % pp)];
        if (ch == 0) continue;
        int64_t k = floor_mod128((__int128)mult * f, m);
        lhs += double(ch) * tw[(size_t)k];
    }

    cplx rhs{0.0, 0.0};
    bool congruent;
    if (ms.r == 1) {
        congruent = true;
    } else {
        int64_t bbar = mod_inverse(ms.b, ms.r);
        congruent = floor_mod128((__int128)c * pp - (__int128)s * bbar, ms.r) == 0;
    }
    if (congruent) {
        int64_t rs = floor_mod128((__int128)ms.r * s, pp);
        rhs = double(ms.r) * gauss_sum(pp) * double(jacobi(rs, pp));
    }
    return {lhs, rhs};
}

double character_twisted_arc_sum(const ModulusSplit& ms, const BumpPair& bumps) {
    int64_t pp = ms.p1 * ms.p2;
    double q2 = double(ms.Q) * double(ms.Q);
    double scale = q2 * ms.delta;
    int64_t n_lo = std::max<int64_t>(1, (int64_t)std::floor(kPhi1SupportLo * q2));
    int64_t n_hi = (int64_t)std::ceil(kPhi1SupportHi * q2);
    std::vector<int> chi((size_t)pp);
    for (int64_t k = 0; k < pp; ++k) chi[(size_t)k] = jacobi(k, pp);

    NeumaierSum total;
    for (int64_t n = n_lo; n <= n_hi; ++n) {
        int ch = chi[(size_t)(n % pp)];
        if (ch == 0) continue;
        double w1 = bumps.phi1(double(n) / q2);
        if (w1 == 0.0) continue;
        long double center = (long double)n * (long double)ms.b / (long double)ms.r;
        long double radius = (long double)kPhi2SupportRadius * scale;
        int64_t a_lo = (int64_t)std::floor(center - radius) - 1;
        int64_t a_hi = (int64_t)std::ceil(center + radius) + 1;
        NeumaierSum inner;
        for (int64_t a = a_lo; a <= a_hi; ++a)
            inner.add(bumps.phi2(double(((long double)a - center) / scale)));
        total.add(double(ch) * w1 * inner.value());
    }
    return total.value();
}

DualSideBound dual_side_bound(const ModulusSplit& ms, double T, const FourierTable& ft) {
    if (!(T > 0.0)) throw std::domain_error("dual_side_bound: T must be positive");
    int64_t pp = ms.p1 * ms.p2;
    double q2 = double(ms.Q) * double(ms.Q);
    double h2 = q2 * ms.delta;          // arg of hat2 at c is c * h2
    double h1 = q2 / double(ms.m());    // arg of hat1 at s is s * h1
    double pref = q2 * q2 * ms.delta / std::sqrt(double(pp));

    int64_t c_max = (int64_t)std::floor(T / h2);
    int64_t s_max = (int64_t)std::floor(T / h1);
    int64_t bbar = ms.r == 1 ? 0 : mod_inverse(ms.b, ms.r);
    (void)bbar;

    double eps = 1e-12;
    double rad1 = ft.decay_radius(FourierTable::Fn::phi1, eps);
    double rad2 = ft.decay_radius(FourierTable::Fn::phi2, eps);
    double max1 = ft.hat_max(FourierTable::Fn::phi1);
    double max2 = ft.hat_max(FourierTable::Fn::phi2);
    double A1 = ft.envelope_A(FourierTable::Fn::phi1);
    double A2 = ft.envelope_A(FourierTable::Fn::phi2);

    NeumaierSum val;
    double sum_abs2 = 0.0;
    for (int64_t c = -c_max; c <= c_max; ++c) {
        double w2 = ft.abs_hat(FourierTable::Fn::phi2, double(c) * h2);
        sum_abs2 += w2;
        if (w2 == 0.0) continue;
        // admissible s: s = c p1 p2 b (mod r)
        int64_t residue = ms.r == 1 ? 0 : floor_mod128((__int128)c * pp * ms.b, ms.r);
        int64_t s0 = residue - ((residue + s_max) / ms.r) * ms.r;
        while (s0 < -s_max) s0 += ms.r;
        NeumaierSum row;
        for (int64_t s = s0; s <= s_max; s += ms.r)
            row.add(ft.abs_hat(FourierTable::Fn::phi1, double(s) * h1));
        val.add(w2 * row.value());
    }

    // omitted terms: bound without the congruence thinning
    int64_t t1_meas = (int64_t)std::floor(kMeasureMax / h1);
    int64_t t2_meas = (int64_t)std::floor(kMeasureMax / h2);
    int64_t rad1_idx = (int64_t)std::ceil(rad1 / h1);
    int64_t rad2_idx = (int64_t)std::ceil(rad2 / h2);
    double s_all = max1 * double(2 * std::max(rad1_idx, (int64_t)1) + 1) +
                   double(std::max<int64_t>(t1_meas - rad1_idx, 0)) * eps +
                   quartic_tail(A1, h1, std::max(t1_meas, (int64_t)1));
    NeumaierSum tail;
    if (c_max < rad2_idx)
        tail.add(double(2 * (rad2_idx - c_max)) * max2 * s_all);
    tail.add((double(std::max<int64_t>(t2_meas - rad2_idx, 0)) * eps +
              quartic_tail(A2, h2, std::max(t2_meas, (int64_t)1))) *
             s_all);
    double s2_all = sum_abs2 + double(2 * std::max<int64_t>(rad2_idx - c_max, 0)) * max2;
    if (s_max < rad1_idx)
        tail.add(s2_all * double(2 * (rad1_idx - s_max)) * max1);
    tail.add(s2_all * (double(std::max<int64_t>(t1_meas - rad1_idx, 0)) * eps +
                       quartic_tail(A1, h1, std::max(t1_meas, (int64_t)1))));

    DualSideBound out;
    out.value = pref * val.value();
    out.tail = pref * tail.value();
    return out;
}

PairSumChain pair_sum_chain(int64_t Q, double delta, int64_t b, int64_t r, double R,
                            double T, const FourierTable& ft) {
    if (std::gcd(b < 0 ? -b : b, r < 1 ? 1 : r) != 1 || r < 1)
        throw std::domain_error("pair_sum_chain: b and r must be coprime, r >= 1");
    PrimeWindow pw(R, r);
    if (pw.P() == 0) throw std::domain_error("pair_sum_chain: empty prime window");

    PairSumChain out;
    out.P = pw.P();
    NeumaierSum total, tails;
    for (int64_t p1 : pw.primes) {
        for (int64_t p2 : pw.primes) {
            if (p1 == p2) continue;
            ModulusSplit ms(p1, p2, r, b, Q, delta);
            DualSideBound dsb = dual_side_bound(ms, T, ft);
            total.add(dsb.value);
            tails.add(dsb.tail);
        }
    }
    out.total = total.value();
    out.tail = tails.value();
    double q2 = double(Q) * double(Q);
    out.q4dR = q2 * q2 * delta * R;
    out.q2dR3 = q2 * delta * R * R * R;
    out.R3 = R * R * R;
    out.q4d_over_R = q2 * q2 * delta / R;
    out.final_combo = q2 * std::sqrt(delta) + q2 * q2 * delta * std::sqrt(delta);
    return out;
}

}  // namespace sievelab
