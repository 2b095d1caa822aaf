#pragma once

#include <cstdint>
#include <vector>

#include "eulerlab/series.hpp"
#include "eulerlab/sieve.hpp"

namespace eulerlab {

struct QuadratureSpec {
    double lower_limit = 2.0;           // 1/log t is singular at t = 1
    double relative_tolerance = 1e-10;  // must lie in (0, 1e-2)
    int max_refinement_depth = 40;
};

// x * log(k) / log(x), the first-order count of primes in (x, kx]
double interval_estimate(double x, double k);

// 1 / log(x)
double local_density(double x);

// Adaptive-Simpson value of int_{lower}^{x} dt / log t.
// Throws on a tolerance miss at max depth instead of returning silently.
double li(double x, const QuadratureSpec& spec = {});

// sum_{n=2}^{x-1} 1 / log n
double density_sum(uint64_t x);

// x * C(x) - int_2^x C(t) dt with C(t) = sum_{p <= t} 1/p, the running
// reciprocal sum integrated exactly between prime jumps.  By partial
// summation this reconstructs pi(x) to within 1.
double abel_estimate(const PrimeSieve& sieve, uint64_t x);

// Aligned series pi, li, x/log x, density_sum plus signed and relative
// errors of the two PNT approximations against exact pi.
std::vector<SumSeries> comparison_table(const PrimeSieve& sieve,
                                        std::vector<uint64_t> xs,
                                        const QuadratureSpec& spec = {});

}  // namespace eulerlab
