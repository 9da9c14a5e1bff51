#include "doctest.h"
#include "oracles.hpp"
#include "sievelab/trigpoly.hpp"

#include <sstream>

using namespace sievelab;

namespace {

TrigPolynomial random_complex_poly(int64_t M, int64_t N, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<cplx> c((size_t)N);
    for (auto& a : c) a = cplx{2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0};
    return TrigPolynomial(M, std::move(c));
}

}  // namespace

TEST_SUITE("trigpoly") {

TEST_CASE("pointwise evaluation") {
    TrigPolynomial ones = make_ones(0, 8);
    CHECK(std::abs(ones.eval(0.0) - cplx{8.0, 0.0}) < 1e-12);
    CHECK(std::abs(ones.eval(ReducedFraction(0, 1)) - cplx{8.0, 0.0}) < 1e-12);

    // full period of a geometric sum vanishes
    TrigPolynomial five = make_ones(0, 5);
    CHECK(std::abs(five.eval(ReducedFraction(1, 5))) < 1e-12);

    // a point mass at beta stacks all phases at alpha = beta
    TrigPolynomial pm = make_point_mass(3, 100, 0.37);
    CHECK(std::abs(pm.eval(0.37) - cplx{100.0, 0.0}) < 1e-9);
}

TEST_CASE("norm Z") {
    CHECK(make_ones(0, 8).norm_Z() == doctest::Approx(8.0));
    TrigPolynomial p(0, {cplx{1, 0}, cplx{2, 0}, cplx{3, 0}});
    CHECK(p.norm_Z() == doctest::Approx(14.0));
    TrigPolynomial zero(0, std::vector<cplx>(4, cplx{0, 0}));
    CHECK(zero.norm_Z() == 0.0);
    CHECK_THROWS_AS(TrigPolynomial(0, {}), std::domain_error);
}

TEST_CASE("lhs over square moduli, frozen examples") {
    TrigPolynomial unit(0, {cplx{1, 0}});
    CHECK(lhs_square_moduli(unit, 2, QRange::full) == doctest::Approx(3.0));

    TrigPolynomial zero(0, std::vector<cplx>(16, cplx{0, 0}));
    CHECK(lhs_square_moduli(zero, 3, QRange::full) == 0.0);

    TrigPolynomial ones4 = make_ones(0, 4);
    CHECK(lhs_square_moduli(ones4, 1, QRange::full) == doctest::Approx(16.0));
}

TEST_CASE("lhs matches the literal double loop") {
    for (uint64_t seed : {7u, 8u}) {
        TrigPolynomial p = random_complex_poly(seed == 7 ? 0 : -13, 48, seed);
        for (int64_t Q : {1, 2, 3, 4}) {
            double naive =
                oracle::naive_lhs_square_moduli(p.coeffs(), p.offset(), 1, Q);
            CHECK(lhs_square_moduli(p, Q, QRange::full) ==
                  doctest::Approx(naive).epsilon(1e-9));
            double naive_dyadic =
                oracle::naive_lhs_square_moduli(p.coeffs(), p.offset(), Q + 1, 2 * Q);
            CHECK(lhs_square_moduli(p, Q, QRange::dyadic) ==
                  doctest::Approx(naive_dyadic).epsilon(1e-9));
        }
    }
}

TEST_CASE("single modulus, frozen examples and Parseval oracle") {
    TrigPolynomial unit(0, {cplx{1, 0}});
    CHECK(lhs_single_modulus(unit, 7) == doctest::Approx(7.0));

    TrigPolynomial p(0, {cplx{1, 0}, cplx{0, 2}, cplx{-3, 1}});
    CHECK(lhs_single_modulus(p, 1) == doctest::Approx(std::norm(cplx{-2, 3})));

    TrigPolynomial ones4 = make_ones(0, 4);
    CHECK(lhs_single_modulus(ones4, 4) == doctest::Approx(16.0));

    for (uint64_t seed = 1; seed <= 6; ++seed) {
        TrigPolynomial q = random_complex_poly((int64_t)seed - 3, 64, 1000 + seed);
        for (int64_t mod : {1, 2, 5, 13, 32})
            CHECK(lhs_single_modulus(q, mod) ==
                  doctest::Approx(oracle::parseval_autocorrelation(q.coeffs(), q.offset(),
                                                                   mod))
                      .epsilon(1e-9));
    }
}

TEST_CASE("per-modulus large sieve bound") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        int64_t N = 1 + (int64_t)rng.next_below(256);
        int64_t q = 1 + (int64_t)rng.next_below(64);
        TrigPolynomial p = make_random_pm1(0, N, 9000 + (uint64_t)trial);
        CHECK(lhs_single_modulus(p, q) <= double(q + N) * p.norm_Z() + 1e-9);
    }
}

TEST_CASE("dyadic blocks stitch into the full range") {
    TrigPolynomial p = random_complex_poly(0, 96, 55);
    for (int64_t Q : {4, 8, 16}) {
        double stitched = lhs_square_moduli(p, 1, QRange::full);
        for (int64_t base = 1; base < Q; base *= 2)
            stitched += lhs_square_moduli(p, base, QRange::dyadic);
        CHECK(lhs_square_moduli(p, Q, QRange::full) ==
              doctest::Approx(stitched).epsilon(1e-9));
    }
}

TEST_CASE("exact rational phases vs naive floating evaluation") {
    TrigPolynomial p = make_random_pm1(0, 10000, 31337);
    for (auto [a, d] : {std::pair<int64_t, int64_t>{1, 9}, {7, 64}, {123, 1024}, {5, 7}}) {
        cplx exact = p.eval(ReducedFraction(a, d));
        cplx naive = oracle::naive_S(p.coeffs(), p.offset(), double(a) / double(d));
        CHECK(std::abs(exact - naive) < 1e-6);
    }
}

TEST_CASE("sequence file round trip and error path") {
    TrigPolynomial p = random_complex_poly(2, 17, 99);
    std::stringstream ss;
    save_sequence(p, ss);
    TrigPolynomial q = load_sequence(ss, 2);
    REQUIRE(q.size() == p.size());
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        CHECK(std::abs(p.coeffs()[i] - q.coeffs()[i]) == 0.0);

    std::stringstream bad("1.0 2.0\nnot numbers\n");
    CHECK_THROWS_AS(load_sequence(bad, 0), std::runtime_error);
    std::stringstream empty("");
    CHECK_THROWS_AS(load_sequence(empty, 0), std::runtime_error);
}

TEST_CASE("generators are deterministic in the seed") {
    TrigPolynomial a = make_random_pm1(0, 64, 42);
    TrigPolynomial b = make_random_pm1(0, 64, 42);
    TrigPolynomial c = make_random_pm1(0, 64, 43);
    CHECK(a.coeffs() == b.coeffs());
    CHECK(a.coeffs() != c.coeffs());
    for (const cplx& x : a.coeffs()) CHECK(std::abs(std::abs(x.real()) - 1.0) == 0.0);
}

}  // TEST_SUITE
