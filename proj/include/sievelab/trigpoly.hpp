#pragma once

#include "sievelab/arith.hpp"
#include "sievelab/common.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sievelab {

// S(alpha) = sum_{n=M+1}^{M+N} a_n e(n alpha),  Z = sum |a_n|^2.
class TrigPolynomial {
public:
    TrigPolynomial(int64_t M, std::vector<cplx> coeffs);

    int64_t offset() const { return M_; }
    int64_t size() const { return (int64_t)coeffs_.size(); }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    double norm_Z() const { return Z_; }

    // S at a real point, phases computed in floating point
    cplx eval(double alpha) const;
    // S at a rational point; the phase n*num is reduced mod den in exact
    // integer arithmetic before any exponential is taken
    cplx eval(const ReducedFraction& alpha) const;

private:
    int64_t M_;
    std::vector<cplx> coeffs_;
    double Z_;
};

enum class QRange { full, dyadic };

// sum over q in range (full: q <= Q, dyadic: Q < q <= 2Q) and residues
// 1 <= a <= q^2 with gcd(a, q) = 1 of |S(a/q^2)|^2
double lhs_square_moduli(const TrigPolynomial& poly, int64_t Q, QRange range);

// sum over all residues 1 <= a <= q of |S(a/q)|^2 (no coprimality)
double lhs_single_modulus(const TrigPolynomial& poly, int64_t q);

// coefficient generators; the random generator draws from SplitMix64 so
// that seeded sequences are identical across platforms
TrigPolynomial make_ones(int64_t M, int64_t N);
TrigPolynomial make_random_pm1(int64_t M, int64_t N, uint64_t seed);
TrigPolynomial make_point_mass(int64_t M, int64_t N, double beta);  // a_n = e(-n beta)

// sequence file: one coefficient per line, "re im"; line k holds a_{M+k}
TrigPolynomial load_sequence(std::istream& in, int64_t M);
TrigPolynomial load_sequence_file(const std::string& path, int64_t M);
void save_sequence(const TrigPolynomial& poly, std::ostream& out);

}  // namespace sievelab
