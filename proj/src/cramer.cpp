#include "eulerlab/cramer.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerlab {

namespace {

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void validate(const CramerConfig& config) {
    if (config.x_max < 2)
        throw std::invalid_argument("CramerConfig: x_max must be >= 2");
    if (config.trials < 1)
        throw std::invalid_argument("CramerConfig: trials must be >= 1");
    if (config.generator_id != "xoshiro256++")
        throw std::invalid_argument("CramerConfig: unknown generator '" +
                                    config.generator_id + "'");
}

// substream derivation: seed xor a hash of the trial index
Xoshiro256pp trial_stream(const CramerConfig& config, uint32_t trial_index) {
    SplitMix64 hash{static_cast<uint64_t>(trial_index) + 1};
    return Xoshiro256pp(config.seed ^ hash.next());
}

// Runs one trial, invoking fn(n) for every member of S in increasing order.
template <typename Fn>
void for_each_member(const CramerConfig& config, uint32_t trial_index, Fn&& fn) {
    Xoshiro256pp rng = trial_stream(config, trial_index);
    for (uint64_t n = 2; n <= config.x_max; ++n) {
        double threshold = 1.0 / std::log(static_cast<double>(n));
        if (rng.uniform() < threshold) fn(n);
    }
}

}  // namespace

uint64_t Xoshiro256pp::next() {
    uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::vector<uint64_t> sample(const CramerConfig& config, uint32_t trial_index) {
    validate(config);
    if (trial_index >= config.trials)
        throw std::invalid_argument("sample: trial_index out of range");
    std::vector<uint64_t> members;
    for_each_member(config, trial_index,
                    [&](uint64_t n) { members.push_back(n); });
    return members;
}

std::vector<CramerStats> collect_stats(const CramerConfig& config) {
    validate(config);
    std::vector<CramerStats> all;
    all.reserve(config.trials);
    for (uint32_t trial = 0; trial < config.trials; ++trial) {
        CramerStats stats;
        stats.gap_histogram.assign(kGapHistogramSize, 0);
        uint64_t prev = 0;       // last member seen, 0 = none yet
        uint64_t prev_prev = 0;  // member before that
        for_each_member(config, trial, [&](uint64_t n) {
            ++stats.count;
            if (prev != 0 && prev == n - 1) ++stats.consecutive_pairs;
            if ((prev != 0 && prev == n - 2) ||
                (prev_prev != 0 && prev_prev == n - 2))
                ++stats.twin_pairs;
            if (prev != 0) {
                uint64_t gap = n - prev;
                ++stats.gap_histogram[gap <= 256 ? gap : kGapOverflowBucket];
            }
            prev_prev = prev;
            prev = n;
        });
        all.push_back(std::move(stats));
    }
    return all;
}

double expected_count(uint64_t x_max) {
    if (x_max < 2) throw std::invalid_argument("expected_count: x_max must be >= 2");
    double sum = 0.0;
    for (uint64_t n = x_max; n >= 2; --n)
        sum += std::min(1.0, 1.0 / std::log(static_cast<double>(n)));
    return sum;
}

double expected_count_variance(uint64_t x_max) {
    if (x_max < 2)
        throw std::invalid_argument("expected_count_variance: x_max must be >= 2");
    double sum = 0.0;
    for (uint64_t n = x_max; n >= 2; --n) {
        double q = std::min(1.0, 1.0 / std::log(static_cast<double>(n)));
        sum += q * (1.0 - q);
    }
    return sum;
}

namespace {

double expected_pair_sum(uint64_t x_max, uint64_t gap, const char* what) {
    if (x_max < 2 + gap)
        throw std::invalid_argument(std::string(what) + ": x_max too small");
    double sum = 0.0;
    for (uint64_t n = x_max; n >= 2 + gap; --n) {
        double a = std::min(1.0, 1.0 / std::log(static_cast<double>(n - gap)));
        double b = std::min(1.0, 1.0 / std::log(static_cast<double>(n)));
        sum += a * b;
    }
    return sum;
}

}  // namespace

double expected_twin_sum(uint64_t x_max) {
    return expected_pair_sum(x_max, 2, "expected_twin_sum");
}

double expected_consecutive_sum(uint64_t x_max) {
    return expected_pair_sum(x_max, 1, "expected_consecutive_sum");
}

std::pair<double, double> mean_variance(const std::vector<double>& values) {
    if (values.empty()) return {0.0, 0.0};
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    if (values.size() == 1) return {mean, 0.0};
    double m2 = 0.0;
    for (double v : values) m2 += (v - mean) * (v - mean);
    return {mean, m2 / static_cast<double>(values.size() - 1)};
}

}  // namespace eulerlab
