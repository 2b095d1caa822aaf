#include "eulerlab/pnt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulerlab {

namespace {

double inv_log(double t) { return 1.0 / std::log(t); }

double simpson(double a, double fa, double m, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Adaptive Simpson with interval bisection; eps is an absolute budget for
// the current interval.
double adaptive_simpson(double a, double fa, double b, double fb, double m,
                        double fm, double whole, double eps, int depth,
                        int max_depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = inv_log(lm), frm = inv_log(rm);
    double left = simpson(a, fa, lm, flm, m, fm);
    double right = simpson(m, fm, rm, frm, b, fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    if (depth >= max_depth)
        throw std::runtime_error(
            "li: quadrature tolerance not reached at max refinement depth");
    return adaptive_simpson(a, fa, m, fm, lm, flm, left, 0.5 * eps, depth + 1,
                            max_depth) +
           adaptive_simpson(m, fm, b, fb, rm, frm, right, 0.5 * eps, depth + 1,
                            max_depth);
}

void validate(const QuadratureSpec& spec) {
    if (!(spec.lower_limit > 1.0))
        throw std::domain_error("QuadratureSpec: lower_limit must exceed 1");
    if (!(spec.relative_tolerance > 0.0) || !(spec.relative_tolerance < 1e-2))
        throw std::domain_error(
            "QuadratureSpec: relative_tolerance must lie in (0, 1e-2)");
}

}  // namespace

double interval_estimate(double x, double k) {
    if (!(x >= 2.0)) throw std::domain_error("interval_estimate: x must be >= 2");
    if (!(k > 1.0)) throw std::domain_error("interval_estimate: k must exceed 1");
    return x * std::log(k) / std::log(x);
}

double local_density(double x) {
    if (!(x > 1.0)) throw std::domain_error("local_density: x must exceed 1");
    return 1.0 / std::log(x);
}

double li(double x, const QuadratureSpec& spec) {
    validate(spec);
    double a = spec.lower_limit;
    if (x < a) throw std::domain_error("li: x below the lower integration limit");
    if (x == a) return 0.0;
    double fa = inv_log(a), fb = inv_log(x);
    double m = 0.5 * (a + x), fm = inv_log(m);
    double whole = simpson(a, fa, m, fm, x, fb);
    double eps = spec.relative_tolerance * std::abs(whole);
    return adaptive_simpson(a, fa, x, fb, m, fm, whole, eps, 0,
                            spec.max_refinement_depth);
}

double density_sum(uint64_t x) {
    if (x < 3) throw std::invalid_argument("density_sum: x must be >= 3");
    double sum = 0.0;
    for (uint64_t n = x - 1; n >= 2; --n)
        sum += 1.0 / std::log(static_cast<double>(n));
    return sum;
}

double abel_estimate(const PrimeSieve& sieve, uint64_t x) {
    if (x < 3) throw std::invalid_argument("abel_estimate: x must be >= 3");
    if (x > sieve.limit())
        throw std::out_of_range("abel_estimate: x exceeds sieve limit");
    // C(t) is piecewise constant with jumps at the primes; integrate the
    // rectangles between consecutive jumps exactly.
    double sum = 0.0;       // C(previous prime)
    double integral = 0.0;  // int_2^{previous prime} C(t) dt
    uint64_t prev = 2;
    sieve.for_each_prime(x, [&](uint64_t p) {
        integral += sum * static_cast<double>(p - prev);
        sum += 1.0 / static_cast<double>(p);
        prev = p;
    });
    integral += sum * static_cast<double>(x - prev);
    return static_cast<double>(x) * sum - integral;
}

std::vector<SumSeries> comparison_table(const PrimeSieve& sieve,
                                        std::vector<uint64_t> xs,
                                        const QuadratureSpec& spec) {
    validate(spec);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (!xs.empty() && xs.back() > sieve.limit())
        throw std::out_of_range("comparison_table: x exceeds sieve limit");

    std::vector<SumSeries> table;
    for (const char* label : {"pi", "li", "x_over_log_x", "density_sum",
                              "li_err", "xlog_err", "li_rel_err", "xlog_rel_err"})
        table.push_back(SumSeries{label, {}});

    for (uint64_t x : xs) {
        double xd = static_cast<double>(x);
        double pi_x = static_cast<double>(sieve.prime_count(x));
        double li_x = li(xd, spec);
        double xlog = xd / std::log(xd);
        double dens = density_sum(x);
        table[0].push(xd, pi_x);
        table[1].push(xd, li_x);
        table[2].push(xd, xlog);
        table[3].push(xd, dens);
        table[4].push(xd, li_x - pi_x);
        table[5].push(xd, xlog - pi_x);
        table[6].push(xd, (li_x - pi_x) / pi_x);
        table[7].push(xd, (xlog - pi_x) / pi_x);
    }
    return table;
}

}  // namespace eulerlab
