#include <doctest.h>

#include <cmath>
#include <limits>

#include "eulerlab/series.hpp"
#include "oracles.hpp"

using namespace eulerlab;

TEST_CASE("SumSeries rejects bad points") {
    SumSeries s{"test", {}};
    s.push(1.0, 2.0);
    CHECK_THROWS_AS(s.push(1.0, 3.0), std::invalid_argument);   // not increasing
    CHECK_THROWS_AS(s.push(2.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(s.push(2.0, std::nan("")), std::invalid_argument);
    s.push(2.0, 3.0);
    CHECK(s.points.size() == 2);
}

TEST_CASE("harmonic sums") {
    CHECK(harmonic_sum(1) == 1.0);
    CHECK(harmonic_sum(4) == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
    CHECK_THROWS_AS(harmonic_sum(0), std::invalid_argument);
}

TEST_CASE("harmonic sum minus log approaches 0.577") {
    CHECK(harmonic_sum(1000000) - std::log(1e6) ==
          doctest::Approx(0.5772161649).epsilon(1e-6));
}

TEST_CASE("gamma estimate values and bounds") {
    CHECK(gamma_estimate(2) == doctest::Approx(1.5 - std::log(2.0)));
    CHECK(gamma_estimate(10) == doctest::Approx(0.6263).epsilon(1e-3));
    CHECK_THROWS_AS(gamma_estimate(1), std::invalid_argument);
}

TEST_CASE("gamma series is strictly decreasing inside (0,1)") {
    SumSeries s = gamma_series(2000);
    REQUIRE(s.points.size() == 1999);
    double prev = 1.0;
    for (auto [x, v] : s.points) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        CHECK(v < prev);
        prev = v;
    }
    // series values match the direct evaluation
    CHECK(s.points[8].second == doctest::Approx(gamma_estimate(10)).epsilon(1e-14));
}

TEST_CASE("zeta partial sums") {
    CHECK(zeta_partial_sum(2.0, 1) == 1.0);
    CHECK(zeta_partial_sum(2.0, 2) == 1.25);
    // partial sum + integral tail bound reproduces zeta(2)
    double tail = std::pow(1e6, -1.0) / (2.0 - 1.0);
    CHECK(zeta_partial_sum(2.0, 1000000) + tail ==
          doctest::Approx(1.644934066848).epsilon(1e-9));
    CHECK_THROWS_AS(zeta_partial_sum(1.0, 10), std::domain_error);
    CHECK_THROWS_AS(zeta_partial_sum(0.5, 10), std::domain_error);
}

TEST_CASE("truncated Euler product converges to the zeta partial sum") {
    PrimeSieve sieve(10000);
    CHECK(euler_product_truncated({2.0, 2, 64}, sieve) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    double z2 = zeta_partial_sum(2.0, 1000000);
    CHECK(std::abs(euler_product_truncated({2.0, 100, 64}, sieve) - z2) < 0.01);
    double z3 = zeta_partial_sum(3.0, 1000000);
    CHECK(std::abs(euler_product_truncated({3.0, 1000, 64}, sieve) - z3) < 1e-6);
    CHECK_THROWS_AS(euler_product_truncated({1.0, 100, 64}, sieve),
                    std::domain_error);
}

TEST_CASE("Euler product grows with the cutoff and stays under zeta") {
    PrimeSieve sieve(10000);
    for (double s : {1.5, 2.0, 3.0}) {
        double zeta = zeta_partial_sum(s, 2000000) +
                      std::pow(2e6, 1.0 - s) / (s - 1.0);
        double prev = 0.0;
        for (uint64_t cutoff : {10, 100, 1000, 10000}) {
            double value = euler_product_truncated({s, cutoff, 64}, sieve);
            CHECK(value > prev);
            CHECK(value < zeta);
            prev = value;
        }
    }
}

TEST_CASE("prime power tail") {
    PrimeSieve sieve(40000);
    CHECK(prime_power_tail(2, 2, sieve) == doctest::Approx(0.125).epsilon(1e-15));
    double base = prime_power_tail(10000, 64, sieve);
    CHECK(base > 0.0);
    CHECK(base < 1.0);
    // stable under doubling either cutoff
    CHECK(std::abs(prime_power_tail(20000, 64, sieve) - base) < 1e-4);
    CHECK(std::abs(prime_power_tail(10000, 128, sieve) - base) < 1e-12);
    // monotone nondecreasing in both cutoffs
    CHECK(prime_power_tail(20000, 64, sieve) >= base);
    CHECK(prime_power_tail(10000, 128, sieve) >= base);
    CHECK_THROWS_AS(prime_power_tail(1, 64, sieve), std::invalid_argument);
}

TEST_CASE("reciprocal prime sum drifts a constant above log log x") {
    PrimeSieve sieve(10000);
    SumSeries s = loglog_comparison(sieve, {100, 10000});
    REQUIRE(s.points.size() == 2);
    // frozen from the exact rational oracle minus log log 100
    CHECK(s.points[0].second == doctest::Approx(0.2756375752).epsilon(1e-6));
    CHECK(s.points[1].second > 0.25);
    CHECK(s.points[1].second < 0.29);
    CHECK(oracle::reciprocal_prime_sum(100) - std::log(std::log(100.0)) ==
          doctest::Approx(s.points[0].second).epsilon(1e-12));
}

TEST_CASE("loglog comparison input validation") {
    PrimeSieve sieve(1000);
    CHECK_THROWS_AS(loglog_comparison(sieve, {2, 100}), std::invalid_argument);
    CHECK_THROWS_AS(loglog_comparison(sieve, {100, 2000}), std::out_of_range);
    CHECK(loglog_comparison(sieve, {}).points.empty());
}
