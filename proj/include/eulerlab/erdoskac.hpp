#pragma once

#include <cstdint>
#include <vector>

#include "eulerlab/sieve.hpp"

namespace eulerlab {

// Histogram layout for standardized values: 32 bins of width 0.25 on
// [-4, 4), preceded and followed by overflow bins.
constexpr double kHistLow = -4.0;
constexpr double kHistHigh = 4.0;
constexpr double kHistBinWidth = 0.25;
constexpr size_t kHistBins = 34;  // [underflow, 32 regular, overflow]

struct DistributionStats {
    uint64_t sample_size = 0;
    double mean = 0.0;      // of the raw omega values
    double variance = 0.0;  // population variance of the raw omega values
    std::vector<uint64_t> histogram;  // of standardized values, kHistBins wide
    double cdf_distance = 0.0;  // sup |empirical CDF - Phi| over the
                                // standardized values; 0 when unstandardized
};

// Standard normal CDF via std::erfc; absolute error well below 1e-7.
double normal_cdf(double z);

// Statistics of omega(n) over n in [n_min, n_max].  When standardize is
// set (the default), each sample is also mapped to
// (omega(n) - log log n) / sqrt(log log n) and compared against the
// standard normal; this requires n_min >= 3 so log log n is positive.
DistributionStats omega_stats(const OmegaTable& table, uint64_t n_min,
                              uint64_t n_max, bool standardize = true);

}  // namespace eulerlab
