// eulerlab: prime-counting, Mertens-type sums, logarithmic-integral
// comparisons, Cramer-model simulation, and omega-distribution statistics,
// emitted as text, CSV, or SVG.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulerlab/cramer.hpp"
#include "eulerlab/erdoskac.hpp"
#include "eulerlab/pnt.hpp"
#include "eulerlab/report.hpp"
#include "eulerlab/series.hpp"
#include "eulerlab/sieve.hpp"

namespace {

using namespace eulerlab;

struct Output {
    std::string format = "text";  // text | csv | svg
    std::string path;             // empty = stdout (text/csv only)
    bool log_x = false;

    std::filesystem::path resolved() const {
        std::filesystem::path p(path);
        if (p.is_relative()) {
            if (const char* dir = std::getenv("EULERLAB_OUT_DIR"))
                return std::filesystem::path(dir) / p;
        }
        return p;
    }

    void deliver(const std::vector<SumSeries>& table,
                 const std::vector<std::string>& config) const {
        if (format == "svg") {
            if (path.empty())
                throw std::runtime_error("svg output requires --output");
            emit_svg(table, resolved(), SvgOptions{.log_x = log_x});
        } else {
            std::string csv = render_csv(table, config);
            if (path.empty())
                std::cout << csv;
            else
                write_file_atomic(resolved(), csv);
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "text, csv or svg")
        ->check(CLI::IsMember({"text", "csv", "svg"}));
    cmd->add_option("-o,--output", out.path,
                    "output file (default stdout; EULERLAB_OUT_DIR resolves "
                    "relative paths)");
    cmd->add_flag("--log-x", out.log_x, "logarithmic x axis for SVG");
}

void print_config(const std::vector<std::string>& config) {
    std::cout << "# eulerlab " << kVersion << "\n";
    for (const auto& line : config) std::cout << "# " << line << "\n";
}

std::string u64s(uint64_t v) { return std::to_string(v); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale experiments on prime counting and prime statistics"};
    app.require_subcommand(1);

    Output out;

    // ---- pi ----
    uint64_t pi_x = 0;
    uint64_t sieve_limit = 0;  // 0 = derived from the command's x
    auto* cmd_pi = app.add_subcommand("pi", "exact prime count pi(x)");
    cmd_pi->add_option("--x", pi_x, "count primes up to x")->required();
    cmd_pi->add_option("--limit", sieve_limit, "sieve limit (default x)");

    // ---- recip-sum ----
    std::vector<uint64_t> rs_xs;
    auto* cmd_rs = app.add_subcommand(
        "recip-sum", "sum of 1/p over primes p <= x, against log log x");
    cmd_rs->add_option("--x", rs_xs, "evaluation points (repeatable)")->required();
    add_output_flags(cmd_rs, out);

    // ---- gamma ----
    uint64_t g_xmax = 1000, g_step = 0;
    auto* cmd_gamma =
        app.add_subcommand("gamma", "harmonic sum minus log x over x = 2..x-max");
    cmd_gamma->add_option("--x-max", g_xmax, "largest x")->required();
    cmd_gamma->add_option("--step", g_step, "x stride (default: about 2000 points)");
    add_output_flags(cmd_gamma, out);

    // ---- euler-product ----
    double ep_s = 2.0;
    uint64_t ep_cutoff = 1000, ep_nmax = 0;
    auto* cmd_ep = app.add_subcommand(
        "euler-product", "truncated Euler product, optionally vs the zeta partial sum");
    cmd_ep->add_option("--s", ep_s, "exponent, s > 1");
    cmd_ep->add_option("--prime-cutoff", ep_cutoff, "largest prime factor")->required();
    cmd_ep->add_option("--zeta-n-max", ep_nmax, "also sum n^-s up to this n");
    add_output_flags(cmd_ep, out);

    // ---- tail ----
    uint64_t t_pcut = 1000, t_tcut = 64;
    auto* cmd_tail = app.add_subcommand(
        "tail", "non-leading groups of the expanded log Euler product");
    cmd_tail->add_option("--prime-cutoff", t_pcut)->required();
    cmd_tail->add_option("--term-cutoff", t_tcut);
    add_output_flags(cmd_tail, out);

    // ---- li ----
    double li_x = 0.0;
    QuadratureSpec quad;
    auto* cmd_li = app.add_subcommand("li", "logarithmic integral from 2 to x");
    cmd_li->add_option("--x", li_x)->required();
    cmd_li->add_option("--lower", quad.lower_limit, "lower integration limit");
    cmd_li->add_option("--rtol", quad.relative_tolerance, "relative tolerance");
    cmd_li->add_option("--max-depth", quad.max_refinement_depth);
    add_output_flags(cmd_li, out);

    // ---- compare ----
    std::vector<uint64_t> cmp_xs;
    auto* cmd_cmp = app.add_subcommand(
        "compare", "pi(x) against li, x/log x and the density sum");
    cmd_cmp->add_option("--x", cmp_xs, "evaluation points (repeatable)")->required();
    add_output_flags(cmd_cmp, out);

    // ---- abel ----
    uint64_t abel_x = 0;
    auto* cmd_abel = app.add_subcommand(
        "abel", "partial-summation reconstruction of pi(x) from sum 1/p");
    cmd_abel->add_option("--x", abel_x)->required();

    // ---- cramer ----
    CramerConfig cc;
    bool cramer_gaps = false;
    auto* cmd_cramer = app.add_subcommand(
        "cramer", "random-set model with inclusion probability 1/log n");
    cmd_cramer->add_option("--x-max", cc.x_max)->required();
    cmd_cramer->add_option("--trials", cc.trials);
    cmd_cramer->add_option("--seed", cc.seed);
    cmd_cramer->add_flag("--gaps", cramer_gaps,
                         "emit the aggregated gap histogram instead of "
                         "per-trial statistics");
    add_output_flags(cmd_cramer, out);

    // ---- erdos-kac ----
    uint64_t ek_min = 3, ek_max = 1000000;
    bool ek_multiplicity = false, ek_raw = false;
    auto* cmd_ek = app.add_subcommand(
        "erdos-kac", "distribution of the number of prime factors");
    cmd_ek->add_option("--n-max", ek_max)->required();
    cmd_ek->add_option("--n-min", ek_min);
    cmd_ek->add_flag("--with-multiplicity", ek_multiplicity,
                     "count prime factors with multiplicity (Omega)");
    cmd_ek->add_flag("--no-standardize", ek_raw, "raw moments only");
    add_output_flags(cmd_ek, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_pi) {
            uint64_t limit = sieve_limit ? sieve_limit : std::max<uint64_t>(pi_x, 2);
            PrimeSieve sieve(limit);
            print_config({"command: pi", "x: " + u64s(pi_x),
                          "limit: " + u64s(limit)});
            std::cout << sieve.prime_count(pi_x) << "\n";
        } else if (*cmd_rs) {
            uint64_t max_x = *std::max_element(rs_xs.begin(), rs_xs.end());
            PrimeSieve sieve(std::max<uint64_t>(max_x, 3));
            SumSeries cmp = loglog_comparison(sieve, rs_xs);
            std::vector<SumSeries> table{SumSeries{"recip_sum", {}},
                                         SumSeries{"loglog_x", {}},
                                         SumSeries{"diff", {}}};
            for (auto [x, diff] : cmp.points) {
                double ll = std::log(std::log(x));
                table[0].push(x, diff + ll);
                table[1].push(x, ll);
                table[2].push(x, diff);
            }
            std::vector<std::string> config{"command: recip-sum",
                                            "limit: " + u64s(max_x)};
            if (out.format == "text") {
                print_config(config);
                for (size_t j = 0; j < table[0].points.size(); ++j)
                    std::cout << format_number(table[0].points[j].first)
                              << ": recip_sum="
                              << format_number(table[0].points[j].second)
                              << " diff=" << format_number(table[2].points[j].second)
                              << "\n";
            } else {
                out.deliver(table, config);
            }
        } else if (*cmd_gamma) {
            if (g_step == 0) g_step = std::max<uint64_t>(1, g_xmax / 2000);
            SumSeries series = gamma_series(g_xmax, g_step);
            std::vector<std::string> config{"command: gamma",
                                            "x-max: " + u64s(g_xmax),
                                            "step: " + u64s(g_step)};
            if (out.format == "text") {
                print_config(config);
                std::cout << "gamma_estimate(" << g_xmax << ") = "
                          << format_number(series.points.back().second) << "\n";
            } else {
                out.deliver({series}, config);
            }
        } else if (*cmd_ep) {
            PrimeSieve sieve(std::max<uint64_t>(ep_cutoff, 2));
            double product =
                euler_product_truncated({ep_s, ep_cutoff, 64}, sieve);
            std::vector<std::string> config{
                "command: euler-product", "s: " + format_number(ep_s),
                "prime-cutoff: " + u64s(ep_cutoff)};
            print_config(config);
            std::cout << "euler_product = " << format_number(product) << "\n";
            if (ep_nmax > 0) {
                double zeta = zeta_partial_sum(ep_s, ep_nmax);
                std::cout << "zeta_partial_sum(" << ep_nmax << ") = "
                          << format_number(zeta) << "\n"
                          << "difference = " << format_number(product - zeta)
                          << "\n";
            }
        } else if (*cmd_tail) {
            PrimeSieve sieve(t_pcut);
            double tail = prime_power_tail(t_pcut, t_tcut, sieve);
            print_config({"command: tail", "prime-cutoff: " + u64s(t_pcut),
                          "term-cutoff: " + u64s(t_tcut)});
            std::cout << "prime_power_tail = " << format_number(tail) << "\n";
        } else if (*cmd_li) {
            print_config({"command: li", "x: " + format_number(li_x),
                          "lower: " + format_number(quad.lower_limit),
                          "rtol: " + format_number(quad.relative_tolerance)});
            std::cout << "li = " << format_number(li(li_x, quad)) << "\n";
        } else if (*cmd_cmp) {
            uint64_t max_x = *std::max_element(cmp_xs.begin(), cmp_xs.end());
            PrimeSieve sieve(std::max<uint64_t>(max_x, 3));
            auto full = comparison_table(sieve, cmp_xs, quad);
            // reporting schema: drop the signed-error columns
            std::vector<SumSeries> table{full[0], full[1], full[2],
                                         full[3], full[6], full[7]};
            std::vector<std::string> config{"command: compare",
                                            "limit: " + u64s(max_x)};
            if (out.format == "text") {
                print_config(config);
                for (size_t j = 0; j < table[0].points.size(); ++j) {
                    std::cout << "x=" << format_number(table[0].points[j].first);
                    for (const auto& s : table)
                        std::cout << " " << s.label << "="
                                  << format_number(s.points[j].second);
                    std::cout << "\n";
                }
            } else if (out.format == "svg") {
                out.deliver({table[0], table[1], table[2]}, config);
            } else {
                out.deliver(table, config);
            }
        } else if (*cmd_abel) {
            PrimeSieve sieve(std::max<uint64_t>(abel_x, 3));
            print_config({"command: abel", "x: " + u64s(abel_x)});
            std::cout << "abel_estimate = "
                      << format_number(abel_estimate(sieve, abel_x)) << "\n"
                      << "pi = " << sieve.prime_count(abel_x) << "\n";
        } else if (*cmd_cramer) {
            auto stats = collect_stats(cc);
            std::vector<std::string> config{
                "command: cramer", "x-max: " + u64s(cc.x_max),
                "trials: " + u64s(cc.trials), "seed: " + u64s(cc.seed),
                "generator: " + cc.generator_id};
            std::vector<double> counts, twins, consecutives;
            for (const auto& s : stats) {
                counts.push_back(static_cast<double>(s.count));
                twins.push_back(static_cast<double>(s.twin_pairs));
                consecutives.push_back(static_cast<double>(s.consecutive_pairs));
            }
            auto [mc, vc] = mean_variance(counts);
            auto [mt, vt] = mean_variance(twins);
            auto [mcons, vcons] = mean_variance(consecutives);
            config.push_back("expected-count: " +
                             format_number(expected_count(cc.x_max)));
            config.push_back("mean-count: " + format_number(mc) +
                             " variance: " + format_number(vc));
            config.push_back("mean-twin-pairs: " + format_number(mt));
            config.push_back("mean-consecutive-pairs: " + format_number(mcons));
            if (cramer_gaps) {
                std::vector<uint64_t> gaps(kGapHistogramSize, 0);
                for (const auto& s : stats)
                    for (size_t g = 0; g < kGapHistogramSize; ++g)
                        gaps[g] += s.gap_histogram[g];
                SumSeries hist{"gap_count", {}};
                for (size_t g = 1; g < kGapHistogramSize; ++g)
                    hist.push(static_cast<double>(g),
                              static_cast<double>(gaps[g]));
                out.deliver({hist}, config);
            } else if (out.format == "text") {
                print_config(config);
            } else {
                std::vector<SumSeries> table{SumSeries{"count", {}},
                                             SumSeries{"twin_pairs", {}},
                                             SumSeries{"consecutive_pairs", {}}};
                for (size_t i = 0; i < stats.size(); ++i) {
                    table[0].push(static_cast<double>(i), counts[i]);
                    table[1].push(static_cast<double>(i), twins[i]);
                    table[2].push(static_cast<double>(i), consecutives[i]);
                }
                out.deliver(table, config);
            }
        } else if (*cmd_ek) {
            auto mode = ek_multiplicity ? OmegaTable::Mode::with_multiplicity
                                        : OmegaTable::Mode::distinct;
            OmegaTable table = build_omega_table(ek_max, mode);
            DistributionStats stats = omega_stats(table, ek_min, ek_max, !ek_raw);
            std::vector<std::string> config{
                "command: erdos-kac", "n-min: " + u64s(ek_min),
                "n-max: " + u64s(ek_max),
                std::string("mode: ") + (ek_multiplicity ? "Omega" : "omega")};
            config.push_back("mean: " + format_number(stats.mean));
            config.push_back("variance: " + format_number(stats.variance));
            config.push_back("loglog-n-max: " +
                             format_number(std::log(std::log(double(ek_max)))));
            if (!ek_raw)
                config.push_back("cdf-distance: " +
                                 format_number(stats.cdf_distance));
            if (out.format == "text" || ek_raw) {
                print_config(config);
            } else {
                SumSeries hist{"count", {}};
                for (size_t b = 0; b < kHistBins; ++b) {
                    double left = kHistLow + kHistBinWidth *
                                  (static_cast<double>(b) - 1.0);
                    hist.push(left, static_cast<double>(stats.histogram[b]));
                }
                out.deliver({hist}, config);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
