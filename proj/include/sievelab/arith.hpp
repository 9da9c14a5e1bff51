#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace sievelab {

// Exact rational in lowest terms, den >= 1. Comparisons cross-multiply in
// 128-bit intermediates, so any pair of int64 fractions compares exactly;
// no rounding ever enters.
struct ReducedFraction {
    int64_t num = 0;
    int64_t den = 1;

    ReducedFraction() = default;
    ReducedFraction(int64_t n, int64_t d);  // reduces; throws if d == 0

    double value() const { return double(num) / double(den); }

    // sign of (this - p/q), computed exactly; q must be positive
    int compare(int64_t p, int64_t q) const;
    int compare(const ReducedFraction& o) const { return compare(o.num, o.den); }
    bool operator==(const ReducedFraction& o) const {
        return num == o.num && den == o.den;
    }
    bool square_denominator() const;
};

// Jacobi symbol (n/m) for odd positive m; 0 iff gcd(n,m) > 1, and (n/1) = 1.
int jacobi(int64_t n, int64_t m);

// sum_{g=1}^{m} (g/m) e(g/m) by direct summation; m odd, squarefree, >= 3.
std::complex<double> gauss_sum(int64_t m);

int64_t divisor_count(int64_t t);

// primes p with lo < p <= hi, ascending (half-open on the left)
std::vector<int64_t> primes_in(double lo, double hi);

// number of distinct prime factors
int omega(int64_t r);

// inverse of b mod r, in [1, r]; requires gcd(b, r) = 1
int64_t mod_inverse(int64_t b, int64_t r);

}  // namespace sievelab
