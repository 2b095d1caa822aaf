#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eulerlab {

// Segmented sieve of Eratosthenes over [2, limit], stored as a bitmap of
// odd integers with 2 special-cased.  Immutable after construction; safe
// to share across threads.
class PrimeSieve {
public:
    static constexpr uint64_t kMaxLimit = 1'000'000'000;

    explicit PrimeSieve(uint64_t limit, uint64_t segment_size = 0);

    uint64_t limit() const { return limit_; }
    uint64_t segment_size() const { return segment_size_; }

    // Membership query; throws std::out_of_range for n > limit.
    bool is_prime(uint64_t n) const;

    // pi(x), exact.
    uint64_t prime_count(uint64_t x) const;

    // sum_{p <= x} 1/p, accumulated in increasing prime order.
    double reciprocal_prime_sum(uint64_t x) const;

    // number of n <= x with n-2 and n both prime
    uint64_t twin_pair_count(uint64_t x) const;

    // number of n <= x with n-1 and n both prime (1 for all x >= 3)
    uint64_t consecutive_pair_count(uint64_t x) const;

    // Visits primes <= x in increasing order.
    template <typename Fn>
    void for_each_prime(uint64_t x, Fn&& fn) const {
        check_range(x);
        if (x >= 2) fn(uint64_t{2});
        for (uint64_t n = 3; n <= x; n += 2)
            if (test_odd(n)) fn(n);
    }

private:
    void check_range(uint64_t x) const;
    bool test_odd(uint64_t n) const {  // n odd, 3 <= n <= limit
        uint64_t i = (n - 3) / 2;
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }
    void build();

    uint64_t limit_;
    uint64_t segment_size_;
    std::vector<uint64_t> bits_;  // bit i <-> odd number 2i+3
};

// Values of omega(n) (distinct prime factors) or Omega(n) (with
// multiplicity) for every n <= limit, built by a factor-marking sieve.
class OmegaTable {
public:
    static constexpr uint64_t kMaxLimit = 100'000'000;

    enum class Mode { distinct, with_multiplicity };

    explicit OmegaTable(uint64_t limit, Mode mode = Mode::distinct);

    uint64_t limit() const { return limit_; }
    Mode mode() const { return mode_; }

    // omega(n); throws std::out_of_range for n > limit or n == 0.
    uint32_t operator()(uint64_t n) const;

private:
    uint64_t limit_;
    Mode mode_;
    std::vector<uint8_t> counts_;
};

OmegaTable build_omega_table(uint64_t limit,
                             OmegaTable::Mode mode = OmegaTable::Mode::distinct);

}  // namespace eulerlab
