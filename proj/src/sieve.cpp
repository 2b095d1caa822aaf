#include "eulerlab/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace eulerlab {

namespace {

uint64_t integer_sqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Dense odd-only sieve used for the base primes (up to sqrt(limit)).
std::vector<uint64_t> base_primes(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 3) return primes;
    std::vector<char> composite((limit - 1) / 2, 0);  // index i <-> 2i+3
    for (uint64_t n = 3; n * n <= limit; n += 2) {
        if (composite[(n - 3) / 2]) continue;
        for (uint64_t m = n * n; m <= limit; m += 2 * n)
            composite[(m - 3) / 2] = 1;
    }
    for (uint64_t i = 0; i < composite.size(); ++i)
        if (!composite[i]) primes.push_back(2 * i + 3);
    return primes;
}

}  // namespace

PrimeSieve::PrimeSieve(uint64_t limit, uint64_t segment_size)
    : limit_(limit), segment_size_(segment_size) {
    if (limit < 2)
        throw std::invalid_argument("PrimeSieve: limit must be >= 2");
    if (limit > kMaxLimit)
        throw std::length_error("PrimeSieve: limit exceeds ceiling of 1e9");
    if (segment_size_ == 0)
        segment_size_ = std::max<uint64_t>(integer_sqrt(limit), 1u << 15);
    build();
}

void PrimeSieve::build() {
    if (limit_ < 3) return;
    uint64_t n_odds = (limit_ - 1) / 2;  // odds in [3, limit]
    bits_.assign((n_odds + 63) / 64, ~uint64_t{0});
    // clear bits past the end so popcount on the last word is exact
    if (n_odds % 64 != 0)
        bits_.back() = (uint64_t{1} << (n_odds % 64)) - 1;

    auto bases = base_primes(integer_sqrt(limit_));

    // Sieve odd-index range [seg_lo, seg_hi) per segment.
    for (uint64_t seg_lo = 0; seg_lo < n_odds; seg_lo += segment_size_) {
        uint64_t seg_hi = std::min(seg_lo + segment_size_, n_odds);
        uint64_t lo_val = 2 * seg_lo + 3;
        for (uint64_t p : bases) {
            uint64_t start = p * p;
            if (start < lo_val) {
                // first odd multiple of p >= lo_val
                uint64_t k = (lo_val + p - 1) / p;
                if (k % 2 == 0) ++k;
                start = k * p;
            }
            for (uint64_t i = (start - 3) / 2; i < seg_hi; i += p)
                bits_[i >> 6] &= ~(uint64_t{1} << (i & 63));
        }
    }
}

void PrimeSieve::check_range(uint64_t x) const {
    if (x > limit_)
        throw std::out_of_range("PrimeSieve: query " + std::to_string(x) +
                                " exceeds limit " + std::to_string(limit_));
}

bool PrimeSieve::is_prime(uint64_t n) const {
    check_range(n);
    if (n < 2) return false;
    if (n == 2) return true;
    if (n % 2 == 0) return false;
    return test_odd(n);
}

uint64_t PrimeSieve::prime_count(uint64_t x) const {
    check_range(x);
    if (x < 2) return 0;
    uint64_t count = 1;  // the prime 2
    if (x < 3) return count;
    uint64_t n_odds = (std::min(x, limit_) - 1) / 2;  // odds in [3, x]
    uint64_t full_words = n_odds / 64;
    for (uint64_t w = 0; w < full_words; ++w)
        count += static_cast<uint64_t>(std::popcount(bits_[w]));
    uint64_t rest = n_odds % 64;
    if (rest)
        count += static_cast<uint64_t>(
            std::popcount(bits_[full_words] & ((uint64_t{1} << rest) - 1)));
    return count;
}

double PrimeSieve::reciprocal_prime_sum(uint64_t x) const {
    check_range(x);
    double sum = 0.0;
    for_each_prime(x, [&](uint64_t p) { sum += 1.0 / static_cast<double>(p); });
    return sum;
}

uint64_t PrimeSieve::twin_pair_count(uint64_t x) const {
    check_range(x);
    uint64_t count = 0;
    for (uint64_t n = 5; n <= x; n += 2)
        if (test_odd(n) && test_odd(n - 2)) ++count;
    return count;
}

uint64_t PrimeSieve::consecutive_pair_count(uint64_t x) const {
    check_range(x);
    // (2, 3) is the only candidate: any other consecutive pair has an even member.
    return (x >= 3 && is_prime(3)) ? 1 : 0;
}

OmegaTable::OmegaTable(uint64_t limit, Mode mode) : limit_(limit), mode_(mode) {
    if (limit < 1)
        throw std::invalid_argument("OmegaTable: limit must be >= 1");
    if (limit > kMaxLimit)
        throw std::length_error("OmegaTable: limit exceeds ceiling of 1e8");
    counts_.assign(limit + 1, 0);
    for (uint64_t p = 2; p <= limit; ++p) {
        if (counts_[p] != 0) continue;  // a smaller prime already divides p
        for (uint64_t m = p; m <= limit; m += p) ++counts_[m];
        if (mode_ == Mode::with_multiplicity) {
            for (uint64_t q = p * p; q <= limit; q *= p) {
                for (uint64_t m = q; m <= limit; m += q) ++counts_[m];
                if (q > limit / p) break;
            }
        }
    }
}

uint32_t OmegaTable::operator()(uint64_t n) const {
    if (n == 0 || n > limit_)
        throw std::out_of_range("OmegaTable: query " + std::to_string(n) +
                                " outside [1, " + std::to_string(limit_) + "]");
    return counts_[n];
}

OmegaTable build_omega_table(uint64_t limit, OmegaTable::Mode mode) {
    return OmegaTable(limit, mode);
}

}  // namespace eulerlab
