#pragma once

#include "sievelab/arith.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace sievelab {

// Window for the point count P(alpha, delta): reduced fractions a/q^2 with
// Q < q <= 2Q, 1 <= a <= q^2, gcd(a, q) = 1 and |a/q^2 - alpha| <= delta
// (closed inequality; boundary fractions count).
struct CountWindow {
    int64_t Q = 1;
    double delta = 1.0;
    bool rational = false;
    ReducedFraction alpha_rat;  // used when rational
    double alpha_real = 0.0;    // used otherwise

    static CountWindow at(double alpha, int64_t Q, double delta);
    static CountWindow at(const ReducedFraction& alpha, int64_t Q, double delta);
};

struct CountResult {
    int64_t count = 0;
    // points whose distance agrees with delta to within a 1e-15 relative
    // guard band; nonzero means a floating tie was decided by <=
    int64_t near_boundary = 0;
};

CountResult count_P(const CountWindow& w);

struct MaxPResult {
    int64_t count = 0;
    double witness = 0.0;  // an alpha achieving the maximum
    int64_t near_boundary = 0;
};

// exact maximum of count_P over all real alpha: all points are sorted and a
// closed window of length 2*delta slides over them
MaxPResult max_P_over_alpha(int64_t Q, double delta);

struct MajorArcParams {
    int64_t Q = 1;
    double delta = 1.0;
};

// v range of the major arcs: v <= 1/(500 Q^2 delta); empty means the major
// arc family is empty for these parameters
int64_t major_arc_vmax(const MajorArcParams& p);

// the (u, v) with v <= vmax, gcd(u, v) = 1, |u/v - alpha| <= 1/(10 Q^2 v),
// if one exists; only u near round(alpha*v) can qualify since the interval
// radius is below 1/(2v)
std::optional<std::pair<int64_t, int64_t>> in_major_arc(double alpha,
                                                        const MajorArcParams& p);

// (b, r) with 1 <= r <= limit, gcd(b, r) = 1, |b/r - alpha| <= 1/(r*limit),
// from continued-fraction convergents
std::pair<int64_t, int64_t> dirichlet_approx(double alpha, int64_t limit);

// minor-arc refinement: empty if alpha lies in a major arc, otherwise the
// Dirichlet pair with limit 500 Q^2, which then satisfies
// r > 1/(500 Q^2 delta) and |b/r - alpha| <= delta
std::optional<std::pair<int64_t, int64_t>> refine_approx(double alpha, int64_t Q,
                                                         double delta);

// minimal positive gap between distinct reduced fractions a/n in [0, 1]
// with Q^2/(2d) <= n <= 5Q^2/d, as an exact rational
ReducedFraction farey_spacing_check(int64_t Q, int64_t d);

}  // namespace sievelab
