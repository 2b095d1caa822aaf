#include "eulerlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulerlab {

void SumSeries::push(double x, double value) {
    if (!std::isfinite(x) || !std::isfinite(value))
        throw std::invalid_argument("SumSeries: non-finite point in series '" +
                                    label + "'");
    if (!points.empty() && x <= points.back().first)
        throw std::invalid_argument("SumSeries: x values must increase strictly");
    points.emplace_back(x, value);
}

double harmonic_sum(uint64_t x) {
    if (x < 1) throw std::invalid_argument("harmonic_sum: x must be >= 1");
    // largest terms last
    double sum = 0.0;
    for (uint64_t n = x; n >= 1; --n) sum += 1.0 / static_cast<double>(n);
    return sum;
}

double gamma_estimate(uint64_t x) {
    if (x < 2) throw std::invalid_argument("gamma_estimate: x must be >= 2");
    return harmonic_sum(x) - std::log(static_cast<double>(x));
}

SumSeries gamma_series(uint64_t x_max, uint64_t step) {
    if (x_max < 2) throw std::invalid_argument("gamma_series: x_max must be >= 2");
    if (step < 1) throw std::invalid_argument("gamma_series: step must be >= 1");
    SumSeries out{"gamma_estimate", {}};
    double h = 1.0;  // harmonic_sum(1)
    uint64_t next = 2;
    for (uint64_t n = 2; n <= x_max; ++n) {
        h += 1.0 / static_cast<double>(n);
        if (n == next) {
            out.push(static_cast<double>(n), h - std::log(static_cast<double>(n)));
            next += step;
        }
    }
    return out;
}

double zeta_partial_sum(double s, uint64_t n_max) {
    if (!(s > 1.0))
        throw std::domain_error("zeta_partial_sum: requires s > 1");
    if (n_max < 1)
        throw std::invalid_argument("zeta_partial_sum: n_max must be >= 1");
    double sum = 0.0;
    if (s == 2.0) {  // the common case, without pow in the hot loop
        for (uint64_t n = n_max; n >= 1; --n) {
            double d = static_cast<double>(n);
            sum += 1.0 / (d * d);
        }
    } else {
        for (uint64_t n = n_max; n >= 1; --n)
            sum += std::pow(static_cast<double>(n), -s);
    }
    return sum;
}

double euler_product_truncated(const TruncationSpec& spec, const PrimeSieve& sieve) {
    if (!(spec.s > 1.0))
        throw std::domain_error("euler_product_truncated: requires s > 1");
    if (spec.prime_cutoff > sieve.limit())
        throw std::out_of_range("euler_product_truncated: cutoff exceeds sieve limit");
    double product = 1.0;
    sieve.for_each_prime(spec.prime_cutoff, [&](uint64_t p) {
        product /= 1.0 - std::pow(static_cast<double>(p), -spec.s);
    });
    return product;
}

double prime_power_tail(uint64_t prime_cutoff, uint64_t term_cutoff,
                        const PrimeSieve& sieve) {
    if (prime_cutoff < 2 || term_cutoff < 2)
        throw std::invalid_argument("prime_power_tail: cutoffs must be >= 2");
    if (prime_cutoff > sieve.limit())
        throw std::out_of_range("prime_power_tail: cutoff exceeds sieve limit");
    double total = 0.0;
    sieve.for_each_prime(prime_cutoff, [&](uint64_t p) {
        double inv = 1.0 / static_cast<double>(p);
        double power = inv * inv;  // p^{-2}
        for (uint64_t j = 2; j <= term_cutoff && power > 0.0; ++j) {
            total += power / static_cast<double>(j);
            power *= inv;
        }
    });
    return total;
}

SumSeries loglog_comparison(const PrimeSieve& sieve, std::vector<uint64_t> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.empty()) return SumSeries{"recip_sum_minus_loglog", {}};
    if (xs.front() < 3)
        throw std::invalid_argument("loglog_comparison: every x must be >= 3");
    if (xs.back() > sieve.limit())
        throw std::out_of_range("loglog_comparison: x exceeds sieve limit");

    SumSeries out{"recip_sum_minus_loglog", {}};
    double sum = 0.0;
    size_t next = 0;
    sieve.for_each_prime(xs.back(), [&](uint64_t p) {
        while (next < xs.size() && xs[next] < p) {
            out.push(static_cast<double>(xs[next]),
                     sum - std::log(std::log(static_cast<double>(xs[next]))));
            ++next;
        }
        sum += 1.0 / static_cast<double>(p);
    });
    for (; next < xs.size(); ++next)
        out.push(static_cast<double>(xs[next]),
                 sum - std::log(std::log(static_cast<double>(xs[next]))));
    return out;
}

}  // namespace eulerlab
