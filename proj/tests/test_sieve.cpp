#include <doctest.h>

#include <numeric>
#include <vector>

#include "eulerlab/sieve.hpp"
#include "oracles.hpp"

using namespace eulerlab;

namespace {

std::vector<uint64_t> primes_up_to(const PrimeSieve& sieve, uint64_t x) {
    std::vector<uint64_t> out;
    sieve.for_each_prime(x, [&](uint64_t p) { out.push_back(p); });
    return out;
}

}  // namespace

TEST_CASE("small prime sets") {
    CHECK(primes_up_to(PrimeSieve(10), 10) == std::vector<uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(PrimeSieve(2), 2) == std::vector<uint64_t>{2});
    CHECK(PrimeSieve(100).prime_count(100) == 25);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(PrimeSieve(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeSieve(PrimeSieve::kMaxLimit + 1), std::length_error);
}

TEST_CASE("queries past the limit are errors, never false") {
    PrimeSieve sieve(100);
    CHECK_THROWS_AS(sieve.is_prime(101), std::out_of_range);
    CHECK_THROWS_AS(sieve.prime_count(101), std::out_of_range);
    CHECK_THROWS_AS(sieve.reciprocal_prime_sum(101), std::out_of_range);
    CHECK_THROWS_AS(sieve.twin_pair_count(101), std::out_of_range);
}

TEST_CASE("membership agrees with trial division up to 1e4") {
    PrimeSieve sieve(10000);
    for (uint64_t n = 2; n <= 10000; ++n)
        CHECK(sieve.is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("prime_count matches a running trial-division count") {
    PrimeSieve sieve(10000);
    CHECK(sieve.prime_count(0) == 0);
    CHECK(sieve.prime_count(1) == 0);
    CHECK(sieve.prime_count(10) == 4);
    CHECK(sieve.prime_count(100) == 25);
    uint64_t running = 0;
    for (uint64_t x = 2; x <= 2000; ++x) {
        if (oracle::is_prime(x)) ++running;
        CHECK(sieve.prime_count(x) == running);
    }
}

TEST_CASE("pi is nondecreasing with unit steps") {
    PrimeSieve sieve(3000);
    uint64_t prev = 0;
    for (uint64_t x = 1; x <= 3000; ++x) {
        uint64_t cur = sieve.prime_count(x);
        CHECK(cur - prev <= 1);
        prev = cur;
    }
}

TEST_CASE("reciprocal prime sums against exact rational arithmetic") {
    PrimeSieve sieve(100);
    CHECK(sieve.reciprocal_prime_sum(1) == 0.0);
    // 1/2 + 1/3 + 1/5 + 1/7 = 247/210
    CHECK(sieve.reciprocal_prime_sum(10) ==
          doctest::Approx(oracle::reciprocal_prime_sum(10)).epsilon(1e-15));
    CHECK(oracle::reciprocal_prime_sum(10) == doctest::Approx(247.0 / 210.0));
    CHECK(sieve.reciprocal_prime_sum(100) ==
          doctest::Approx(oracle::reciprocal_prime_sum(100)).epsilon(1e-14));
    CHECK(sieve.reciprocal_prime_sum(100) == doctest::Approx(1.802817201).epsilon(1e-9));
}

TEST_CASE("reciprocal prime sum increases exactly at primes") {
    PrimeSieve sieve(1000);
    double prev = sieve.reciprocal_prime_sum(1);
    for (uint64_t x = 2; x <= 1000; ++x) {
        double cur = sieve.reciprocal_prime_sum(x);
        if (oracle::is_prime(x))
            CHECK(cur > prev);
        else
            CHECK(cur == prev);
        prev = cur;
    }
}

TEST_CASE("twin pair counts") {
    PrimeSieve sieve(10000);
    CHECK(sieve.twin_pair_count(4) == 0);
    CHECK(sieve.twin_pair_count(7) == 2);  // (3,5) and (5,7)
    CHECK(sieve.twin_pair_count(100) == 8);
    uint64_t brute = 0;
    for (uint64_t n = 4; n <= 10000; ++n) {
        if (oracle::is_prime(n) && oracle::is_prime(n - 2)) ++brute;
        if (n % 500 == 0) CHECK(sieve.twin_pair_count(n) == brute);
    }
    CHECK(sieve.twin_pair_count(10000) == brute);
    CHECK(sieve.twin_pair_count(10000) <= sieve.prime_count(10000));
}

TEST_CASE("consecutive pairs: only (2,3) ever completes") {
    PrimeSieve sieve(1000000);
    CHECK(sieve.consecutive_pair_count(2) == 0);
    CHECK(sieve.consecutive_pair_count(3) == 1);
    CHECK(sieve.consecutive_pair_count(1000000) == 1);
    for (uint64_t x = 2; x <= 100; ++x)
        CHECK(sieve.consecutive_pair_count(x) ==
              std::min<uint64_t>(1, sieve.prime_count(x) - 1));
}

TEST_CASE("results do not depend on the segment size") {
    PrimeSieve a(100000);               // default segment
    PrimeSieve b(100000, 320);          // just above sqrt(limit)
    PrimeSieve c(100000, 100000);       // one segment
    for (uint64_t x : {2u, 99u, 1000u, 54321u, 100000u}) {
        CHECK(a.prime_count(x) == b.prime_count(x));
        CHECK(a.prime_count(x) == c.prime_count(x));
    }
    for (uint64_t n = 99900; n <= 100000; ++n) {
        CHECK(a.is_prime(n) == b.is_prime(n));
        CHECK(a.is_prime(n) == c.is_prime(n));
    }
}

TEST_CASE("omega table against trial division") {
    OmegaTable omega = build_omega_table(10000);
    CHECK(omega(1) == 0);
    CHECK(omega(30) == 3);
    CHECK(omega(8) == 1);
    for (uint64_t n = 1; n <= 10000; ++n)
        CHECK(omega(n) == oracle::omega(n));
}

TEST_CASE("omega with multiplicity") {
    OmegaTable big = build_omega_table(5000, OmegaTable::Mode::with_multiplicity);
    CHECK(big(8) == 3);
    CHECK(big(12) == 3);
    for (uint64_t n = 1; n <= 5000; ++n)
        CHECK(big(n) == oracle::big_omega(n));
}

TEST_CASE("omega is additive on coprime arguments") {
    OmegaTable omega = build_omega_table(10000);
    for (uint64_t m = 2; m <= 100; ++m)
        for (uint64_t n = m + 1; m * n <= 10000; ++n)
            if (std::gcd(m, n) == 1)
                CHECK(omega(m * n) == omega(m) + omega(n));
}

TEST_CASE("omega table errors") {
    OmegaTable omega = build_omega_table(100);
    CHECK_THROWS_AS(omega(0), std::out_of_range);
    CHECK_THROWS_AS(omega(101), std::out_of_range);
    CHECK_THROWS_AS(build_omega_table(0), std::invalid_argument);
    CHECK_THROWS_AS(build_omega_table(OmegaTable::kMaxLimit + 1),
                    std::length_error);
}
