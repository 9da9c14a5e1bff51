#include "sievelab/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sievelab {

const char* to_string(BoundName name) {
    switch (name) {
        case BoundName::theorem1_min: return "theorem1_min";
        case BoundName::goal: return "goal";
        case BoundName::classical_q4: return "classical_q4";
        case BoundName::per_modulus_sum: return "per_modulus_sum";
    }
    return "?";
}

BoundName bound_from_string(const std::string& s) {
    if (s == "theorem1_min") return BoundName::theorem1_min;
    if (s == "goal") return BoundName::goal;
    if (s == "classical_q4") return BoundName::classical_q4;
    if (s == "per_modulus_sum") return BoundName::per_modulus_sum;
    throw std::domain_error("unknown bound name: " + s);
}

double bound_value(BoundName name, int64_t Q, int64_t N, double Z) {
    if (Q < 1 || N < 1) throw std::domain_error("bound_value: Q, N must be >= 1");
    if (Z < 0) throw std::domain_error("bound_value: Z must be nonnegative");
    double q = double(Q), n = double(N);
    switch (name) {
        case BoundName::theorem1_min:
            return (q * q * q + n + std::min(n * std::sqrt(q), std::sqrt(n) * q * q)) * Z;
        case BoundName::goal:
            return (q * q * q + n + std::sqrt(n) * q * q) * Z;
        case BoundName::classical_q4:
            return (q * q * q * q + n) * Z;
        case BoundName::per_modulus_sum:
            return q * (n + q * q) * Z;
    }
    throw std::domain_error("bound_value: unknown bound name");
}

QRangeClass q_range_class(int64_t Q, int64_t N) {
    if (Q < 1 || N < 1) throw std::domain_error("q_range_class: Q, N must be >= 1");
    __int128 q2 = (__int128)Q * Q;
    __int128 q4 = q2 * q2;
    if (q4 <= N) return QRangeClass::below;
    if (q2 >= N) return QRangeClass::above;
    return QRangeClass::inside;
}

const char* to_string(QRangeClass c) {
    switch (c) {
        case QRangeClass::below: return "below";
        case QRangeClass::inside: return "inside";
        case QRangeClass::above: return "above";
    }
    return "?";
}

static std::string fmt_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string BoundReport::csv_header() {
    return "Q,N,Z,bound_name,lhs,bound_value,ratio,log2NQ";
}

std::string BoundReport::csv_row() const {
    std::string row;
    row += std::to_string(Q);
    row += ',';
    row += std::to_string(N);
    row += ',';
    row += fmt_g17(Z);
    row += ',';
    row += to_string(name);
    row += ',';
    row += fmt_g17(lhs);
    row += ',';
    row += fmt_g17(bound);
    row += ',';
    row += fmt_g17(ratio);
    row += ',';
    row += fmt_g17(log2NQ);
    return row;
}

BoundReport make_report(int64_t Q, int64_t N, double Z, double lhs, BoundName name) {
    BoundReport rep;
    rep.Q = Q;
    rep.N = N;
    rep.Z = Z;
    rep.name = name;
    rep.lhs = lhs;
    rep.bound = bound_value(name, Q, N, Z);
    rep.degenerate = rep.bound == 0.0;
    rep.ratio = rep.degenerate ? 0.0 : lhs / rep.bound;
    rep.log2NQ = std::log2(double(N) * double(Q));
    return rep;
}

BoundReport ratio_report(const TrigPolynomial& poly, int64_t Q, BoundName name) {
    double lhs = lhs_square_moduli(poly, Q, QRange::full);
    return make_report(Q, poly.size(), poly.norm_Z(), lhs, name);
}

}  // namespace sievelab
