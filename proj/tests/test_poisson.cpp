#include "doctest.h"
#include "oracles.hpp"
#include "sievelab/poisson.hpp"

#include <cmath>

using namespace sievelab;

namespace {

const FourierTable& table() {
    static FourierTable ft(make_bumps(), 1e-10);
    return ft;
}

}  // namespace

TEST_SUITE("poisson") {

TEST_CASE("modulus split validation") {
    CHECK_NOTHROW(ModulusSplit(3, 5, 4, 1, 4, 1.0 / 64.0));
    CHECK_THROWS_AS(ModulusSplit(3, 3, 4, 1, 4, 0.5), std::domain_error);
    CHECK_THROWS_AS(ModulusSplit(3, 9, 4, 1, 4, 0.5), std::domain_error);   // 9 not prime
    CHECK_THROWS_AS(ModulusSplit(2, 5, 3, 1, 4, 0.5), std::domain_error);   // even prime
    CHECK_THROWS_AS(ModulusSplit(3, 5, 9, 1, 4, 0.5), std::domain_error);   // gcd(r, p1p2)
    CHECK_THROWS_AS(ModulusSplit(3, 5, 4, 2, 4, 0.5), std::domain_error);   // gcd(b, r)
    CHECK_THROWS_AS(ModulusSplit(3, 5, 4, 1, 4, 2.0), std::domain_error);

    ModulusSplit ms(3, 5, 4, 1, 4, 1.0 / 64.0);
    CHECK(ms.m() == 60);
    CHECK(ms.alpha1() == doctest::Approx(1.0 / 16.0));
    CHECK(ms.beta2() == doctest::Approx(4.0));
    CHECK(ms.alpha2() == doctest::Approx(-1.0));
}

TEST_CASE("transform values at zero are the exact bump integrals") {
    // plateau + two sigma tails: 6 + 1/2 + 1 and 16 + 6 + 6
    CHECK(std::abs(table().hat(FourierTable::Fn::phi1, 0.0) - cplx{7.5, 0.0}) < 1e-8);
    CHECK(std::abs(table().hat(FourierTable::Fn::phi2, 0.0) - cplx{28.0, 0.0}) < 1e-8);
}

TEST_CASE("transform symmetry and decay") {
    for (double t : {0.4, 2.0, 7.3, 19.0}) {
        CHECK(std::abs(table().hat(FourierTable::Fn::phi1, -t) -
                       std::conj(table().hat(FourierTable::Fn::phi1, t))) < 1e-9);
        CHECK(std::abs(table().hat(FourierTable::Fn::phi2, -t) -
                       std::conj(table().hat(FourierTable::Fn::phi2, t))) < 1e-9);
    }
    double A1 = table().envelope_A(FourierTable::Fn::phi1);
    for (double t = 1.0; t <= 100.0; t += 3.7)
        CHECK(table().abs_hat(FourierTable::Fn::phi1, t) * t * t * t * t <= A1);
    // phi2 is much smoother at its edges, so its transform dies much earlier
    CHECK(table().decay_radius(FourierTable::Fn::phi2, 1e-12) <
          table().decay_radius(FourierTable::Fn::phi1, 1e-12));
}

TEST_CASE("quadrature error control") {
    BumpPair b = make_bumps();
    CHECK_THROWS_AS(fourier_hat(b.phi1, 1.0, 0.0, 0.0, 1e-10), std::domain_error);
    CHECK_THROWS_AS(fourier_hat(b.phi1, 0.5, 5.0, 1.0, 0.0), std::domain_error);
    // same value from scratch as through the cache
    cplx direct = fourier_hat(b.phi2, -10.0, 10.0, 3.25, 1e-10);
    CHECK(std::abs(direct - table().hat(FourierTable::Fn::phi2, 3.25)) < 1e-9);
}

TEST_CASE("poisson summation, reference split") {
    ModulusSplit ms(3, 5, 4, 1, 4, 1.0 / 64.0);
    double trunc = suggest_trunc(ms, table(), 1e-12);
    PoissonCheck pc = poisson_check(ms, 1, trunc, 1e-9, table());
    // hand count: x1 = 1 is the only lattice column, Phi1 = 2 on the
    // plateau, and the five x2 values give Phi2 weights summing to 7
    CHECK(pc.direct == doctest::Approx(14.0).epsilon(1e-12));
    CHECK(pc.gap <= 1e-6 + pc.tail);
    CHECK(std::abs(pc.dual.imag()) < 1e-9);
}

TEST_CASE("poisson summation across splits and residues") {
    for (const ModulusSplit& ms :
         {ModulusSplit(3, 5, 7, 2, 4, 1.0 / 64.0), ModulusSplit(3, 7, 2, 1, 4, 1.0 / 32.0),
          ModulusSplit(5, 7, 1, 1, 4, 1.0 / 64.0)}) {
        double trunc = suggest_trunc(ms, table(), 1e-12);
        for (int64_t f : {int64_t(1), ms.m() / 3 + 1, ms.m()}) {
            PoissonCheck pc = poisson_check(ms, f, trunc, 1e-9, table());
            CHECK(pc.gap <= 1e-6 + pc.tail);
        }
    }
}

TEST_CASE("empty lattice support") {
    // m = 105 exceeds the 72-integer-wide Phi1 support window, so small f
    // have no lattice column at all
    ModulusSplit ms(3, 5, 7, 1, 4, 1.0 / 64.0);
    double trunc = suggest_trunc(ms, table(), 1e-12);
    PoissonCheck pc = poisson_check(ms, 2, trunc, 1e-9, table());
    CHECK(pc.direct == 0.0);
    CHECK(std::abs(pc.dual) <= 1e-6 + pc.tail);
}

TEST_CASE("doubling the truncation stays within the tail") {
    ModulusSplit ms(3, 5, 4, 1, 4, 1.0 / 64.0);
    double trunc = suggest_trunc(ms, table(), 1e-12);
    PoissonCheck a = poisson_check(ms, 7, trunc, 1e-9, table());
    PoissonCheck b = poisson_check(ms, 7, 2.0 * trunc, 1e-9, table());
    CHECK(std::abs(a.dual - b.dual) <= a.tail + 1e-12);
}

TEST_CASE("character-sum identity, exhaustive small split") {
    ModulusSplit ms(3, 5, 4, 1, 4, 1.0 / 64.0);
    int64_t m = ms.m();
    double worst = 0.0;
    for (int64_t s = 0; s < m; ++s)
        for (int64_t c = 0; c < ms.r; ++c) {
            CharSumPair p = charsum_identity(ms, s, c);
            worst = std::max(worst, std::abs(p.lhs - p.rhs));
        }
    CHECK(worst <= 1e-9 * double(m));

    // s divisible by p1 with the congruence satisfied: both sides vanish
    CharSumPair p = charsum_identity(ms, 6, 6 * 15 % 4);  // c p1 p2 = s (mod 4), b = 1
    CHECK(std::abs(p.rhs) == 0.0);
    CHECK(std::abs(p.lhs) <= 1e-9 * double(m));
}

TEST_CASE("character-sum identity at r = 1 is the gauss sum") {
    ModulusSplit ms(3, 7, 1, 1, 4, 1.0 / 64.0);
    cplx tau = gauss_sum(21);
    for (int64_t s = 0; s < 21; ++s) {
        CharSumPair p = charsum_identity(ms, s, 0);
        CHECK(std::abs(p.lhs - double(jacobi(s, 21)) * tau) < 1e-9);
        CHECK(std::abs(p.rhs - double(jacobi(s, 21)) * tau) < 1e-9);
    }
}

TEST_CASE("dual-side bound") {
    ModulusSplit ms(3, 5, 4, 1, 4, 1.0 / 64.0);

    // T below the first admissible lattice step keeps only c = s = 0
    double h2 = 16.0 / 64.0;               // Q^2 delta
    double h1 = 16.0 / 60.0;               // Q^2 / m
    double T0 = 0.5 * std::min(h1, h2);
    DualSideBound only_origin = dual_side_bound(ms, T0, table());
    double pref = 256.0 / 64.0 / std::sqrt(15.0);  // Q^4 delta / sqrt(p1 p2)
    CHECK(only_origin.value == doctest::Approx(pref * 7.5 * 28.0).epsilon(1e-8));

    DualSideBound a = dual_side_bound(ms, 64.0, table());
    DualSideBound b = dual_side_bound(ms, 128.0, table());
    CHECK(b.value - a.value >= 0.0);
    CHECK(b.value - a.value <= a.tail + 1e-12);

    // the bound really does dominate the twisted arc sum
    double twisted = std::abs(character_twisted_arc_sum(ms, make_bumps()));
    CHECK(twisted <= a.value + a.tail + 1e-9);
}

TEST_CASE("pair-sum chain") {
    // single prime in (2, 4]: no pairs, zero total
    PairSumChain solo = pair_sum_chain(4, 1.0 / 64.0, 1, 5, 2.0, 32.0, table());
    CHECK(solo.P == 1);
    CHECK(solo.total == 0.0);

    CHECK_THROWS_AS(pair_sum_chain(4, 1.0 / 64.0, 1, 3, 0.9, 32.0, table()),
                    std::domain_error);

    PairSumChain chain = pair_sum_chain(8, 1.0 / 256.0, 1, 700, 10.0, 64.0, table());
    CHECK(chain.P == 4);  // 11, 13, 17, 19, none dividing 700
    CHECK(chain.total > 0.0);
    CHECK(chain.q4dR == doctest::Approx(4096.0 / 256.0 * 10.0));
    CHECK(chain.final_combo == doctest::Approx(64.0 / 16.0 + 4096.0 / 4096.0));

    // consistency with the sieve estimate's character term
    BumpPair bumps = make_bumps();
    PrimeWindow pw(10.0, 700);
    NeumaierSum twisted;
    for (int64_t p1 : pw.primes)
        for (int64_t p2 : pw.primes)
            if (p1 != p2)
                twisted.add(std::abs(character_twisted_arc_sum(
                    ModulusSplit(p1, p2, 700, 1, 8, 1.0 / 256.0), bumps)));
    CHECK(twisted.value() <= chain.total + chain.tail + 1e-9);
}

}  // TEST_SUITE
