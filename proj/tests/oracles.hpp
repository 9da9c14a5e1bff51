// Independent reference computations for the tests. Everything here is
// deliberately written the slow, literal way and shares no code with the
// library paths it checks.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline cplx e(double x) { return std::polar(1.0, 2.0 * 3.14159265358979323846 * x); }

// S(alpha) term by term, floating phases
inline cplx naive_S(const std::vector<cplx>& coeffs, int64_t M, double alpha) {
    cplx s{0.0, 0.0};
    for (size_t i = 0; i < coeffs.size(); ++i)
        s += coeffs[i] * e(double(M + 1 + (int64_t)i) * alpha);
    return s;
}

// the literal double sum of the left-hand side over square moduli
inline double naive_lhs_square_moduli(const std::vector<cplx>& coeffs, int64_t M,
                                      int64_t q_lo, int64_t q_hi) {
    double total = 0.0;
    for (int64_t q = q_lo; q <= q_hi; ++q)
        for (int64_t a = 1; a <= q * q; ++a)
            if (std::gcd(a, q) == 1)
                total += std::norm(naive_S(coeffs, M, double(a) / double(q * q)));
    return total;
}

// expanding the square: sum_a |S(a/q)|^2 = q * sum_{m = n mod q} a_m conj(a_n)
inline double parseval_autocorrelation(const std::vector<cplx>& coeffs, int64_t M,
                                       int64_t q) {
    cplx acc{0.0, 0.0};
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < coeffs.size(); ++j) {
            int64_t ni = M + 1 + (int64_t)i;
            int64_t nj = M + 1 + (int64_t)j;
            if (((ni - nj) % q + q) % q == 0) acc += coeffs[i] * std::conj(coeffs[j]);
        }
    return double(q) * acc.real();
}

inline int64_t prime_count_direct(int64_t x) {
    if (x < 2) return 0;
    std::vector<char> comp((size_t)x + 1, 0);
    int64_t count = 0;
    for (int64_t p = 2; p <= x; ++p) {
        if (comp[(size_t)p]) continue;
        ++count;
        for (int64_t k = p * p; k <= x; k += p) comp[(size_t)k] = 1;
    }
    return count;
}

// Euler's criterion for odd prime p
inline int legendre_euler(int64_t n, int64_t p) {
    n %= p;
    if (n < 0) n += p;
    if (n == 0) return 0;
    int64_t result = 1, base = n, expo = (p - 1) / 2;
    while (expo > 0) {
        if (expo & 1) result = (__int128)result * base % p;
        base = (__int128)base * base % p;
        expo >>= 1;
    }
    return result == 1 ? 1 : -1;
}

// the literal count of reduced fractions a/q^2 near u/v, all residues scanned
inline int64_t count_P_brute(int64_t u, int64_t v, int64_t Q, double delta) {
    int64_t count = 0;
    for (int64_t q = Q + 1; q <= 2 * Q; ++q) {
        int64_t d = q * q;
        for (int64_t a = 1; a <= d; ++a) {
            if (std::gcd(a, q) != 1) continue;
            __int128 diff = (__int128)a * v - (__int128)u * d;
            long double lhs = diff < 0 ? -(long double)diff : (long double)diff;
            if (lhs <= (long double)delta * (long double)d * (long double)v) ++count;
        }
    }
    return count;
}

}  // namespace oracle
