#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eulerlab/sieve.hpp"

namespace eulerlab {

// Ordered (x, value) evaluation points of a partial sum or comparison curve.
struct SumSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;

    // Appends a point; x must increase strictly and value must be finite.
    void push(double x, double value);
};

struct TruncationSpec {
    double s = 2.0;
    uint64_t prime_cutoff = 1000;
    uint64_t term_cutoff = 64;
};

// sum_{n=1}^{x} 1/n
double harmonic_sum(uint64_t x);

// harmonic_sum(x) - log x; lies in (0, 1) for every x >= 2 and decreases
// toward the Euler-Mascheroni constant.
double gamma_estimate(uint64_t x);

// gamma_estimate evaluated at x = 2, 2+step, ... up to x_max (single pass).
SumSeries gamma_series(uint64_t x_max, uint64_t step = 1);

// sum_{n=1}^{n_max} n^{-s}, s > 1 (accumulated smallest-term-first)
double zeta_partial_sum(double s, uint64_t n_max);

// prod_{p <= prime_cutoff} (1 - p^{-s})^{-1}, s > 1
double euler_product_truncated(const TruncationSpec& spec, const PrimeSieve& sieve);

// sum_{j=2}^{term_cutoff} (1/j) sum_{p <= prime_cutoff} p^{-j}
// (the non-leading groups of the expanded log of the Euler product)
double prime_power_tail(uint64_t prime_cutoff, uint64_t term_cutoff,
                        const PrimeSieve& sieve);

// series of sum_{p <= x} 1/p - log log x over the given x values (each >= 3)
SumSeries loglog_comparison(const PrimeSieve& sieve, std::vector<uint64_t> xs);

}  // namespace eulerlab
