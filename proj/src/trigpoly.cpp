#include "sievelab/trigpoly.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sievelab {

namespace {

// twiddle tables stay affordable up to den ~ 2^21; beyond that fall back
// to per-term exponentials (still with exactly reduced phases)
constexpr int64_t kTwiddleLimit = int64_t(1) << 21;

std::vector<cplx> twiddle_table(int64_t den) {
    std::vector<cplx> tw((size_t)den);
    for (int64_t k = 0; k < den; ++k) tw[(size_t)k] = unit_phase(double(k) / double(den));
    return tw;
}

int64_t floor_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

TrigPolynomial::TrigPolynomial(int64_t M, std::vector<cplx> coeffs)
    : M_(M), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::domain_error("TrigPolynomial: need at least one coefficient");
    NeumaierSum z;
    for (const cplx& a : coeffs_) z.add(std::norm(a));
    Z_ = z.value();
}

cplx TrigPolynomial::eval(double alpha) const {
    cplx acc{0.0, 0.0};
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        double n = double(M_ + 1 + (int64_t)i);
        acc += coeffs_[i] * unit_phase(n * alpha);
    }
    return acc;
}

cplx TrigPolynomial::eval(const ReducedFraction& alpha) const {
    int64_t den = alpha.den;
    int64_t a = floor_mod(alpha.num, den);
    // phase index of n*a mod den, advanced incrementally across n
    int64_t k = (int64_t)(((__int128)(M_ + 1) * a) % den);
    if (k < 0) k += den;
    cplx acc{0.0, 0.0};
    if (den <= kTwiddleLimit) {
        std::vector<cplx> tw = twiddle_table(den);
        for (const cplx& c : coeffs_) {
            acc += c * tw[(size_t)k];
            k += a;
            if (k >= den) k -= den;
        }
    } else {
        for (const cplx& c : coeffs_) {
            acc += c * unit_phase(double(k) / double(den));
            k += a;
            if (k >= den) k -= den;
        }
    }
    return acc;
}

namespace {

// One modulus block of the left-hand side: sum over the given residues a
// of |S(a/den)|^2. Coefficients are first folded by residue class mod den
// (n = k mod den implies n*a = k*a mod den, exactly), so each point costs
// O(den) regardless of N.
double modulus_block(const TrigPolynomial& poly, int64_t den, int64_t modulus_for_gcd,
                     bool coprime_only) {
    std::vector<cplx> folded((size_t)den, cplx{0.0, 0.0});
    int64_t k = floor_mod(poly.offset() + 1, den);
    for (const cplx& c : poly.coeffs()) {
        folded[(size_t)k] += c;
        if (++k == den) k = 0;
    }
    std::vector<cplx> tw = twiddle_table(den);
    NeumaierSum block;
    for (int64_t a = 1; a <= den; ++a) {
        if (coprime_only && std::gcd(a, modulus_for_gcd) != 1) continue;
        cplx s{0.0, 0.0};
        int64_t idx = 0;  // (k*a) mod den, advanced by a per k
        for (int64_t kk = 0; kk < den; ++kk) {
            s += folded[(size_t)kk] * tw[(size_t)idx];
            idx += a;
            if (idx >= den) idx -= den;
        }
        block.add(std::norm(s));
    }
    return block.value();
}

}  // namespace

double lhs_square_moduli(const TrigPolynomial& poly, int64_t Q, QRange range) {
    if (Q < 1) throw std::domain_error("lhs_square_moduli: Q must be >= 1");
    int64_t q_lo = range == QRange::full ? 1 : Q + 1;
    int64_t q_hi = range == QRange::full ? Q : 2 * Q;
    NeumaierSum total;
    for (int64_t q = q_lo; q <= q_hi; ++q)
        total.add(modulus_block(poly, q * q, q, /*coprime_only=*/true));
    return total.value();
}

double lhs_single_modulus(const TrigPolynomial& poly, int64_t q) {
    if (q < 1) throw std::domain_error("lhs_single_modulus: q must be >= 1");
    return modulus_block(poly, q, q, /*coprime_only=*/false);
}

TrigPolynomial make_ones(int64_t M, int64_t N) {
    return TrigPolynomial(M, std::vector<cplx>((size_t)N, cplx{1.0, 0.0}));
}

TrigPolynomial make_random_pm1(int64_t M, int64_t N, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<cplx> c((size_t)N);
    for (auto& a : c) a = cplx{double(rng.next_sign()), 0.0};
    return TrigPolynomial(M, std::move(c));
}

TrigPolynomial make_point_mass(int64_t M, int64_t N, double beta) {
    std::vector<cplx> c((size_t)N);
    for (int64_t i = 0; i < N; ++i)
        c[(size_t)i] = unit_phase(-double(M + 1 + i) * beta);
    return TrigPolynomial(M, std::move(c));
}

TrigPolynomial load_sequence(std::istream& in, int64_t M) {
    std::vector<cplx> c;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        double re, im;
        if (!(ls >> re >> im)) {
            std::ostringstream msg;
            msg << "sequence file: malformed line " << lineno << ": '" << line << "'";
            throw std::runtime_error(msg.str());
        }
        c.emplace_back(re, im);
    }
    if (c.empty()) throw std::runtime_error("sequence file: no coefficients");
    return TrigPolynomial(M, std::move(c));
}

TrigPolynomial load_sequence_file(const std::string& path, int64_t M) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path);
    return load_sequence(in, M);
}

void save_sequence(const TrigPolynomial& poly, std::ostream& out) {
    char buf[64];
    for (const cplx& a : poly.coeffs()) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", a.real(), a.imag());
        out << buf;
    }
}

}  // namespace sievelab
