#include "eulerlab/erdoskac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulerlab {

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

DistributionStats omega_stats(const OmegaTable& table, uint64_t n_min,
                              uint64_t n_max, bool standardize) {
    if (n_min < 2 || n_min >= n_max)
        throw std::invalid_argument("omega_stats: need 2 <= n_min < n_max");
    if (n_max > table.limit())
        throw std::out_of_range("omega_stats: n_max exceeds table limit");
    if (standardize && n_min < 3)
        throw std::invalid_argument(
            "omega_stats: standardization requires n_min >= 3 (log log n > 0)");

    DistributionStats stats;
    stats.sample_size = n_max - n_min + 1;
    stats.histogram.assign(kHistBins, 0);

    // raw moments in one pass
    double sum = 0.0, sum_sq = 0.0;
    for (uint64_t n = n_min; n <= n_max; ++n) {
        double w = static_cast<double>(table(n));
        sum += w;
        sum_sq += w * w;
    }
    double size = static_cast<double>(stats.sample_size);
    stats.mean = sum / size;
    stats.variance = sum_sq / size - stats.mean * stats.mean;

    if (!standardize) return stats;

    std::vector<double> z;
    z.reserve(stats.sample_size);
    for (uint64_t n = n_min; n <= n_max; ++n) {
        double ll = std::log(std::log(static_cast<double>(n)));
        z.push_back((static_cast<double>(table(n)) - ll) / std::sqrt(ll));
    }
    for (double v : z) {
        if (v < kHistLow) {
            ++stats.histogram.front();
        } else if (v >= kHistHigh) {
            ++stats.histogram.back();
        } else {
            ++stats.histogram[1 + static_cast<size_t>((v - kHistLow) / kHistBinWidth)];
        }
    }

    // Kolmogorov distance: sup evaluated on both sides of each jump of the
    // empirical CDF.
    std::sort(z.begin(), z.end());
    double sup = 0.0;
    for (uint64_t i = 0; i < stats.sample_size; ++i) {
        double phi = normal_cdf(z[i]);
        double lo = static_cast<double>(i) / size;
        double hi = static_cast<double>(i + 1) / size;
        sup = std::max({sup, std::abs(phi - lo), std::abs(phi - hi)});
    }
    stats.cdf_distance = sup;
    return stats;
}

}  // namespace eulerlab
