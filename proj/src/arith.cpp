#include "sievelab/arith.hpp"

#include "sievelab/common.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sievelab {

ReducedFraction::ReducedFraction(int64_t n, int64_t d) {
    if (d == 0) throw std::domain_error("ReducedFraction: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;  // n == 0
    num = n / g;
    den = d / g;
}

int ReducedFraction::compare(int64_t p, int64_t q) const {
    if (q <= 0) throw std::domain_error("ReducedFraction::compare: q must be positive");
    // num/den vs p/q  <=>  num*q vs p*den; products of int64 always fit in 128 bits
    __int128 lhs = (__int128)num * q;
    __int128 rhs = (__int128)p * den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

bool ReducedFraction::square_denominator() const {
    int64_t s = (int64_t)std::llround(std::sqrt((double)den));
    for (int64_t c = std::max<int64_t>(s - 2, 0); c <= s + 2; ++c)
        if (c * c == den) return true;
    return false;
}

int jacobi(int64_t n, int64_t m) {
    if (m <= 0 || m % 2 == 0)
        throw std::domain_error("jacobi: modulus must be positive and odd");
    n %= m;
    if (n < 0) n += m;
    int result = 1;
    while (n != 0) {
        while (n % 2 == 0) {
            n /= 2;
            int64_t m8 = m % 8;
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(n, m);
        if (n % 4 == 3 && m % 4 == 3) result = -result;
        n %= m;
    }
    return m == 1 ? result : 0;
}

static bool is_squarefree(int64_t m) {
    for (int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

std::complex<double> gauss_sum(int64_t m) {
    if (m < 3 || m % 2 == 0)
        throw std::domain_error("gauss_sum: m must be odd and >= 3");
    if (!is_squarefree(m))
        throw std::domain_error("gauss_sum: m must be squarefree");
    cplx acc{0.0, 0.0};
    for (int64_t g = 1; g <= m; ++g) {
        int chi = jacobi(g, m);
        if (chi != 0) acc += double(chi) * unit_phase(double(g) / double(m));
    }
    return acc;
}

int64_t divisor_count(int64_t t) {
    if (t <= 0) throw std::domain_error("divisor_count: t must be positive");
    int64_t count = 1;
    for (int64_t p = 2; p * p <= t; ++p) {
        if (t % p == 0) {
            int64_t e = 0;
            while (t % p == 0) {
                t /= p;
                ++e;
            }
            count *= e + 1;
        }
    }
    if (t > 1) count *= 2;
    return count;
}

std::vector<int64_t> primes_in(double lo, double hi) {
    std::vector<int64_t> out;
    if (!(hi >= 2.0) || hi < lo) return out;
    int64_t limit = (int64_t)std::floor(hi);
    std::vector<char> composite(limit + 1, 0);
    for (int64_t p = 2; p * p <= limit; ++p)
        if (!composite[p])
            for (int64_t k = p * p; k <= limit; k += p) composite[k] = 1;
    for (int64_t p = 2; p <= limit; ++p)
        if (!composite[p] && double(p) > lo) out.push_back(p);
    return out;
}

int omega(int64_t r) {
    if (r <= 0) throw std::domain_error("omega: r must be positive");
    int count = 0;
    for (int64_t p = 2; p * p <= r; ++p) {
        if (r % p == 0) {
            ++count;
            while (r % p == 0) r /= p;
        }
    }
    if (r > 1) ++count;
    return count;
}

int64_t mod_inverse(int64_t b, int64_t r) {
    if (r <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
    // extended Euclid on (b mod r, r)
    int64_t a = b % r;
    if (a < 0) a += r;
    int64_t old_r = a, cur_r = r;
    int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        int64_t q = old_r / cur_r;
        old_r = std::exchange(cur_r, old_r - q * cur_r);
        old_s = std::exchange(cur_s, old_s - q * cur_s);
    }
    if (old_r != 1 && r != 1)
        throw std::domain_error("mod_inverse: arguments are not coprime");
    int64_t inv = old_s % r;
    if (inv <= 0) inv += r;  // representative in [1, r]
    return inv;
}

}  // namespace sievelab
