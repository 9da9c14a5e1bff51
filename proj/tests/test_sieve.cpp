#include "doctest.h"
#include "oracles.hpp"
#include "sievelab/common.hpp"
#include "sievelab/farey.hpp"
#include "sievelab/sieve.hpp"
#include "sievelab/verify.hpp"

#include <cmath>

using namespace sievelab;

TEST_SUITE("sieve") {

TEST_CASE("bump values") {
    BumpPair b = make_bumps();
    CHECK(b.phi1(2.0) == 2.0);
    CHECK(b.phi1(0.4) == 0.0);
    CHECK(b.phi1(5.5) == 0.0);
    CHECK(b.phi2(-4.0) == 2.0);
    CHECK(b.phi2(4.0) == 2.0);
    CHECK(b.phi2(10.5) == 0.0);
    CHECK(b.phi2(7.0) == doctest::Approx(1.0));  // sigma(1/2) = 1/2 exactly

    for (int i = 0; i <= 2000; ++i) {
        double x = -11.0 + 22.0 * double(i) / 2000.0;
        CHECK(b.phi1(x) >= 0.0);
        CHECK(b.phi2(x) >= 0.0);
        if (x >= 1.0 && x <= 4.0) CHECK(b.phi1(x) >= 1.0);
        if (x >= -4.0 && x <= 4.0) CHECK(b.phi2(x) >= 1.0);
        if (x < kPhi1SupportLo || x > kPhi1SupportHi) CHECK(b.phi1(x) == 0.0);
        if (std::abs(x) > kPhi2SupportRadius) CHECK(b.phi2(x) == 0.0);
    }
}

TEST_CASE("prime window") {
    PrimeWindow pw(10.0, 1);
    CHECK(pw.primes == std::vector<int64_t>{11, 13, 17, 19});
    CHECK(pw.P() == 4);

    PrimeWindow excl(10.0, 13 * 17);
    CHECK(excl.primes == std::vector<int64_t>{11, 19});
    CHECK(excl.P() >= (int64_t)primes_in(10.0, 20.0).size() - omega(13 * 17));

    CHECK_THROWS_AS(PrimeWindow(10.0, 0), std::domain_error);
}

TEST_CASE("weight function invariants") {
    CHECK_THROWS_AS(WeightFunction(0, {1.0, 0.0}), std::domain_error);   // w(0) != 0
    CHECK_THROWS_AS(WeightFunction(1, {1.0, -0.5}), std::domain_error);  // negative
    WeightFunction w(-2, {1.0, 0.5, 0.0, 0.25, 2.0});
    CHECK(w.at(-2) == 1.0);
    CHECK(w.at(0) == 0.0);
    CHECK(w.at(2) == 2.0);
    CHECK(w.at(5) == 0.0);
    CHECK(w.max_support_abs() == 2);
}

TEST_CASE("square sieve sides, frozen examples") {
    PrimeWindow pw(10.0, 1);

    WeightFunction interval(1, std::vector<double>(100, 1.0));
    SieveSides s = square_sieve_sides(interval, pw);
    CHECK(s.lhs == doctest::Approx(10.0));  // squares 1, 4, ..., 100
    CHECK(s.term1 == doctest::Approx(25.0));
    CHECK(s.term2 >= 0.0);
    CHECK_FALSE(s.support_within_eP);  // 100 >= e^4

    WeightFunction zero(1, std::vector<double>(50, 0.0));
    SieveSides z = square_sieve_sides(zero, pw);
    CHECK(z.lhs == 0.0);
    CHECK(z.term1 == 0.0);
    CHECK(z.term2 == 0.0);

    WeightFunction point(4, {1.0});
    SieveSides p = square_sieve_sides(point, pw);
    CHECK(p.lhs == doctest::Approx(1.0));  // n = 2
    CHECK(p.term1 == doctest::Approx(0.25));
    CHECK(p.support_within_eP);  // 4 < e^4
}

TEST_CASE("square sieve inequality over interval indicators") {
    double worst = 0.0;
    for (int64_t X : {int64_t(100), int64_t(1000), int64_t(10000)}) {
        WeightFunction w(1, std::vector<double>((size_t)X, 1.0));
        for (double R : {10.0, 20.0, 40.0}) {
            PrimeWindow pw(R, 1);
            SieveSides s = square_sieve_sides(w, pw);
            worst = std::max(worst, s.lhs / (s.term1 + s.term2));
        }
    }
    INFO("measured square-sieve constant: " << worst);
    CHECK(worst <= 4.0);
}

TEST_CASE("weighted count majorizes the Farey count") {
    BumpPair bumps = make_bumps();
    SplitMix64 rng(808);
    int done = 0;
    while (done < 25) {
        int64_t Q = 4 + (int64_t)rng.next_below(13);
        double delta = std::pow(2.0, -(6.0 + 10.0 * rng.next_unit()));
        double alpha = rng.next_unit();
        if (in_major_arc(alpha, MajorArcParams{Q, delta})) continue;
        auto br = refine_approx(alpha, Q, delta);
        if (!br) continue;
        auto [b, r] = *br;
        double wc = weighted_count(b, r, Q, delta, bumps);
        int64_t cp =
            count_P(CountWindow::at(ReducedFraction(b, r), Q, std::min(2.0 * delta, 1.0)))
                .count;
        CHECK(double(cp) <= wc);
        ++done;
    }
}

TEST_CASE("weighted count edge cases") {
    BumpPair bumps = make_bumps();
    // b/r far from every a/q^2 relative to a tiny delta: the inner support
    // holds no integer at all
    CHECK(weighted_count(1, 125003, 4, 1e-9, bumps) == 0.0);
    CHECK(weighted_count(1, 9, 2, 1e-3, bumps) > 0.0);
    CHECK_THROWS_AS(weighted_count(2, 4, 4, 1e-3, bumps), std::domain_error);
}

TEST_CASE("arc weight feeds the sieve estimate") {
    BumpPair bumps = make_bumps();
    int64_t Q = 8, b = 1, r = 700;
    double delta = 1.0 / 1024.0;
    WeightFunction w = make_arc_weight(b, r, Q, delta, bumps);
    // w vanishes off [Q^2/2, 5 Q^2]
    CHECK(w.at(31) == 0.0);
    CHECK(w.at(321) == 0.0);

    SieveEstimate est = sieve_estimate_P(b, r, Q, delta, 10.0, bumps);
    CHECK(est.P == 4);
    CHECK(est.estimate == doctest::Approx(est.term1 + est.term2));
    CHECK(est.term1 > 0.0);

    // 2 * sum_{n >= 1} w(n^2) is exactly the weighted count
    PrimeWindow pw(10.0, r);
    SieveSides sides = square_sieve_sides(w, pw);
    CHECK(2.0 * sides.lhs ==
          doctest::Approx(weighted_count(b, r, Q, delta, bumps)).epsilon(1e-12));

    CHECK_THROWS_AS(sieve_estimate_P(1, 3, 8, 1e-3, 0.9, bumps), std::domain_error);
}

TEST_CASE("chosen R") {
    CHECK(choose_R(8, 1.0 / 1024.0).value == doctest::Approx(2.0));
    CHECK(choose_R(16, 1.0 / 4096.0).value == doctest::Approx(4.0));
    CHECK(choose_R(5, 1.0).value == doctest::Approx(25.0));
    CHECK_FALSE(choose_R(16, 1.0 / 4096.0).too_small);
    CHECK(choose_R(4, 1.0 / 4096.0).too_small);
}

}  // TEST_SUITE
