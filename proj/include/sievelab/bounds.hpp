#pragma once

#include "sievelab/trigpoly.hpp"

#include <cstdint>
#include <string>

namespace sievelab {

enum class BoundName { theorem1_min, goal, classical_q4, per_modulus_sum };

const char* to_string(BoundName name);
BoundName bound_from_string(const std::string& s);  // throws on unknown name

// Right-hand sides, with the epsilon factor fixed to 1:
//   theorem1_min:    (Q^3 + N + min(N sqrt(Q), sqrt(N) Q^2)) * Z
//   goal:            (Q^3 + N + sqrt(N) Q^2) * Z
//   classical_q4:    (Q^4 + N) * Z
//   per_modulus_sum: Q (N + Q^2) * Z
double bound_value(BoundName name, int64_t Q, int64_t N, double Z);

enum class QRangeClass { below, inside, above };

// below if Q <= N^{1/4}, above if Q >= N^{1/2}, inside otherwise;
// decided exactly via Q^4 <= N and Q^2 >= N
QRangeClass q_range_class(int64_t Q, int64_t N);
const char* to_string(QRangeClass c);

struct BoundReport {
    int64_t Q = 0;
    int64_t N = 0;
    double Z = 0.0;
    BoundName name = BoundName::goal;
    double lhs = 0.0;
    double bound = 0.0;
    double ratio = 0.0;      // lhs / bound when bound > 0
    bool degenerate = false;  // Z == 0: bound is 0, ratio undefined
    double log2NQ = 0.0;     // the reader's stand-in for the epsilon factor

    // CSV row: Q,N,Z,bound_name,lhs,bound_value,ratio,log2NQ
    std::string csv_row() const;
    static std::string csv_header();
};

// fills a report from the full-range left-hand side over q <= Q
BoundReport ratio_report(const TrigPolynomial& poly, int64_t Q, BoundName name);

// report with a caller-supplied lhs (grid runners reuse one lhs evaluation
// across the four bound names)
BoundReport make_report(int64_t Q, int64_t N, double Z, double lhs, BoundName name);

}  // namespace sievelab
