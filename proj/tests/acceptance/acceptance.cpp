// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// All Monte Carlo work uses base seed 1; replica i uses seed 1 + i.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "gwheaps/checks.hpp"
#include "gwheaps/estimator.hpp"
#include "gwheaps/hammersley.hpp"
#include "gwheaps/heap_sorter.hpp"
#include "gwheaps/oracle.hpp"
#include "gwheaps/parallel.hpp"
#include "gwheaps/poisson_field.hpp"
#include "gwheaps/stats.hpp"

using namespace gwheaps;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

const auto kBinary = OffspringDistribution::dirac(2);

Outcome worked_example() {
    const std::vector<SequenceItem> seq = {{.1, 1}, {.7, 2}, {.2, 2}, {.4, 3}, {.8, 1}, {.3, 1}};
    HeapSorter sorter;
    for (const auto& item : seq) sorter.insert(item.label, item.capacity);
    std::map<double, std::int64_t> alive;
    for (const auto& [label, entry] : sorter.alive().entries()) alive[label] = entry.lives;
    const std::map<double, std::int64_t> expected = {{.3, 1}, {.4, 3}, {.7, 1}, {.8, 1}};
    const auto r = sorter.tree_count();
    return {r == 2 && alive == expected, fmt("R(6)=%llu, %zu alive particles", (unsigned long long)r, alive.size())};
}

Outcome greedy_optimality() {
    checks::CheckOptions opt;
    opt.trials = 1000;
    opt.seed = kSeed;
    const auto r = checks::run_suite(checks::Suite::optimality, opt);
    return {r.ok(), fmt("%zu/%zu instances match the exhaustive optimum on every prefix", r.passed, r.trials)};
}

Outcome ulam_reduction() {
    const auto unit = OffspringDistribution::dirac(1);
    std::size_t matches = 0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto seq = generate_sequence(unit, 10000, kSeed + k);
        std::vector<double> labels;
        for (const auto& item : seq) labels.push_back(item.label);
        if (count_trees_all(seq).back() == oracle::lds_length(labels)) ++matches;
    }
    const std::size_t n = 1000000;
    std::vector<double> ratios(50);
    for_each_replica(ratios.size(), 0, [&](std::size_t i) {
        const auto seq = generate_sequence(unit, n, kSeed + i);
        ratios[i] = static_cast<double>(count_trees_all(seq).back()) / std::sqrt(static_cast<double>(n));
    });
    const double band = stats::mean(ratios);
    return {matches == 100 && band >= 1.6 && band <= 2.4,
            fmt("%zu/100 equal the LDS at n=1e4; mean R/sqrt(n)=%.4f at n=1e6 (band [1.6, 2.4])", matches, band)};
}

Outcome time_change() {
    checks::CheckOptions opt;
    opt.trials = 100;
    opt.seed = kSeed;
    opt.horizon = 50.0;
    const auto r = checks::run_suite(checks::Suite::timechange, opt);
    return {r.ok(), fmt("%zu/%zu fields on [0,1]x(0,50] agree for every n", r.passed, r.trials)};
}

Outcome scaling_coupling() {
    std::size_t passed = 0;
    std::size_t lines = 0;
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto field = sample_field(0.0, 5.0, 5.0, kBinary, kSeed + k);
        bool ok = true;
        for (double c : {std::numbers::e, 1.0 / std::numbers::e, 3.7}) {
            const auto cmp = compare_scaled(field, c, 1e-12);
            ok = ok && cmp.equal;
            lines += cmp.lines_compared;
            worst = std::max(worst, cmp.max_rel_error);
        }
        passed += ok;
    }
    return {passed == 100, fmt("%zu/100 trials, %zu lines compared, max relative error %.3g (tol 1e-12)", passed,
                               lines, worst)};
}

Outcome monotonicity() {
    std::size_t extension_ok = 0;
    std::size_t deletion_ok = 0;
    const double s = 1.0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto field = sample_field(0.0, 4.0, 8.0, kBinary, kSeed + k);
        const double top = field.horizon();
        const auto unit_field = restrict_field(field, 0.0, 1.0, 0.0, top);
        const auto unit = simulate(unit_field);
        const auto wide = simulate(field);

        std::set<double> wide_heights;
        for (double h : crossing_heights(wide, 0.0)) wide_heights.insert(h);
        bool subset = true;
        for (const auto& h : unit.h_lines) subset = subset && (!h.rootless || wide_heights.contains(h.t));
        extension_ok += subset;

        const auto before = count_crossings(unit, 0.0, s, top);
        const auto after = count_crossings(simulate(restrict_field(unit_field, 0.0, 1.0, s, top)), 0.0, s, top);
        deletion_ok += after >= before;
    }
    return {extension_ok == 100 && deletion_ok == 100,
            fmt("(a) right extension %zu/100, (b) deletion below s=1 %zu/100", extension_ok, deletion_ok)};
}

// Shared between the strip criterion and the cross-estimator criterion.
StripEstimate strip_run() {
    std::vector<double> widths;
    for (int k = 1; k <= 5; ++k) widths.push_back(window_edge(k));
    return estimate_r_inf(kBinary, widths, 200, kSeed, true);
}

Outcome strip_monotone(const StripEstimate& e) {
    std::size_t monotone = 0;
    for (const auto& row : e.per_replica) {
        bool ok = true;
        for (std::size_t k = 1; k < row.size(); ++k) ok = ok && row[k] >= row[k - 1];
        monotone += ok;
    }
    std::vector<double> m;
    for (const auto& x : e.estimates) m.push_back(x.point);
    const double inc4 = m[3] - m[2];
    const double inc5 = m[4] - m[3];
    return {monotone == e.per_replica.size() && inc5 < inc4,
            fmt("%zu/%zu replicas nondecreasing; means %.4f %.4f %.4f %.4f %.4f; last increments %.4f > %.4f",
                monotone, e.per_replica.size(), m[0], m[1], m[2], m[3], m[4], inc4, inc5)};
}

Outcome log_growth(const DiscreteEstimate& e) {
    const double lo = e.slope_lower_decade;
    const double hi = e.slope_upper_decade;
    const double rel = std::abs(lo - hi) / (0.5 * (lo + hi));
    return {e.slope.point > 1.0 && e.slope.ci_low > 1.0 && rel < 0.15,
            fmt("slope %.4f, CI [%.4f, %.4f]; decade slopes %.4f and %.4f differ by %.1f%% (limit 15%%)",
                e.slope.point, e.slope.ci_low, e.slope.ci_high, lo, hi, 100.0 * rel)};
}

Outcome trajectory_spread() {
    const auto s = trajectory(kBinary, 10000000, 10, kSeed);
    const double spread = final_decade_spread(s);
    return {spread < 0.15, fmt("R(n)/log n at n=1e7 is %.4f; final-decade spread %.2f%% (limit 15%%)",
                               s.ratio.back(), 100.0 * spread)};
}

Outcome stationarity() {
    const auto r = stationarity_report(kBinary, std::exp(6.0), 1, 4, 500, kSeed);
    std::string means;
    for (const auto& row : r.rows) means += fmt(" %.4f", row.mean);
    return {r.max_abs_z < 3.0, fmt("window means%s; max |z| = %.3f (limit 3)", means.c_str(), r.max_abs_z)};
}

Outcome poisson_counts() {
    const double a = 0.0, b = 2.0, horizon = 3.0;
    std::vector<std::uint64_t> counts;
    for (std::uint64_t k = 0; k < 10000; ++k) counts.push_back(sample_field(a, b, horizon, kBinary, kSeed + k).size());
    const auto fit = stats::chi_square_poisson(counts, (b - a) * horizon);
    return {fit.p_value > 0.001,
            fmt("chi2=%.3f, dof=%d, p=%.4f (significance 0.001)", fit.statistic, (int)fit.dof, fit.p_value)};
}

Outcome cross_estimator(const DiscreteEstimate& d, const StripEstimate& s) {
    const double ratio = d.ratio.point;
    const double slope = d.slope.point;
    const double strip = s.estimates.back().point;
    const double rel = std::abs(ratio - slope) / slope;
    return {rel < 0.10 && strip < ratio && strip < slope,
            fmt("ratio %.4f, slope %.4f (differ %.1f%%, limit 10%%); strip at W=e^5 %.4f", ratio, slope, 100.0 * rel,
                strip)};
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %-28s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    };

    report(1, "worked example", worked_example);
    report(2, "greedy optimality", greedy_optimality);
    report(3, "ulam reduction", ulam_reduction);
    report(4, "time change", time_change);
    report(5, "scaling coupling", scaling_coupling);
    report(6, "monotonicity couplings", monotonicity);

    StripEstimate strip;
    report(7, "strip monotone convergence", [&] {
        strip = strip_run();
        return strip_monotone(strip);
    });
    DiscreteEstimate discrete;
    report(8, "logarithmic growth", [&] {
        discrete = estimate_c_discrete(kBinary, 1000000, 200, kSeed);
        return log_growth(discrete);
    });
    report(9, "trajectory convergence", trajectory_spread);
    report(10, "window stationarity", stationarity);
    report(11, "poisson atom counts", poisson_counts);
    report(12, "cross-estimator consistency", [&] {
        if (strip.estimates.empty() || discrete.mean_r.empty()) return Outcome{false, "prerequisite run failed"};
        return cross_estimator(discrete, strip);
    });

    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
