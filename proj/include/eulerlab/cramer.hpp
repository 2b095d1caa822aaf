#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eulerlab {

// splitmix64; used for seeding and substream derivation
struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

// xoshiro256++, bit-stable across platforms
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : state_) w = sm.next();
    }
    uint64_t next();
    // uniform draw on [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_[4];
};

struct CramerConfig {
    uint64_t x_max = 100000;
    uint32_t trials = 200;
    uint64_t seed = 0;
    std::string generator_id = "xoshiro256++";
};

struct CramerStats {
    uint64_t count = 0;              // |S ∩ [2, x_max]|
    uint64_t twin_pairs = 0;         // n and n-2 both in S
    uint64_t consecutive_pairs = 0;  // n and n-1 both in S
    // gap_histogram[g] counts gaps of size g between successive members,
    // g <= 256; larger gaps land in the overflow bucket at index 257.
    std::vector<uint64_t> gap_histogram;
};

constexpr size_t kGapHistogramSize = 258;
constexpr size_t kGapOverflowBucket = 257;

// The random set S of trial `trial_index`: each n in [2, x_max] included
// independently when a uniform draw falls below 1/log n.  The per-trial
// stream is derived from (seed, trial_index), so any trial can be
// regenerated on its own.
std::vector<uint64_t> sample(const CramerConfig& config, uint32_t trial_index);

// Per-trial statistics for trials 0 .. trials-1, in trial order.
std::vector<CramerStats> collect_stats(const CramerConfig& config);

// sum_{n=2}^{x_max} min(1, 1/log n): the exact mean of the count statistic
double expected_count(uint64_t x_max);

// sum_{n=2}^{x_max} q(n) (1 - q(n)), q(n) = min(1, 1/log n): the exact
// variance of the count statistic
double expected_count_variance(uint64_t x_max);

// sum_{n=4}^{x_max} min(1, 1/log(n-2)) * min(1, 1/log n): the model's
// expected twin-pair count (divergent as x_max grows)
double expected_twin_sum(uint64_t x_max);

// same with gap 1: expected consecutive pairs, also divergent
double expected_consecutive_sum(uint64_t x_max);

// mean and unbiased sample variance of a sequence
std::pair<double, double> mean_variance(const std::vector<double>& values);

}  // namespace eulerlab
