#include "gwheaps/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gwheaps/errors.hpp"
#include "gwheaps/hammersley.hpp"
#include "gwheaps/heap_sorter.hpp"
#include "gwheaps/parallel.hpp"
#include "gwheaps/stats.hpp"

namespace gwheaps {

namespace {

Provenance provenance_for(const OffspringDistribution& dist, std::uint64_t seed, std::size_t replicas) {
    return {dist.to_spec(), seed, replicas, kVersion};
}

void require_replicas(std::size_t replicas) {
    if (replicas < 2) throw DomainError("at least 2 replicas are needed for an interval, got " + std::to_string(replicas));
}

CEstimate make_estimate(std::span<const double> samples, EstimateMethod method, double n_or_width) {
    const auto iv = stats::mean_interval(samples);
    CEstimate e;
    e.point = iv.mean;
    e.std_error = iv.std_error;
    e.ci_low = iv.low;
    e.ci_high = iv.high;
    e.replicas = samples.size();
    e.method = method;
    e.n_or_width = n_or_width;
    return e;
}

}  // namespace

const char* method_name(EstimateMethod method) {
    switch (method) {
        case EstimateMethod::ratio_at_n: return "ratio-at-n";
        case EstimateMethod::slope_vs_logn: return "slope-vs-logn";
        case EstimateMethod::strip_window: return "strip-window";
    }
    return "?";
}

std::vector<std::size_t> geometric_checkpoints(std::size_t n_max, int per_decade) {
    if (per_decade < 1) throw DomainError("checkpoints_per_decade must be >= 1");
    std::set<std::size_t> points;
    for (int j = 1;; ++j) {
        const double v = std::round(std::pow(10.0, static_cast<double>(j) / per_decade));
        if (v > static_cast<double>(n_max)) break;
        if (v >= 2.0) points.insert(static_cast<std::size_t>(v));
    }
    if (n_max >= 2) points.insert(n_max);
    return {points.begin(), points.end()};
}

ConvergenceSeries trajectory(const OffspringDistribution& dist, std::size_t n_max, int per_decade,
                             std::uint64_t seed) {
    if (n_max < 10) throw DomainError("trajectory needs n_max >= 10");
    ConvergenceSeries out;
    out.checkpoints = geometric_checkpoints(n_max, per_decade);
    const auto sequence = generate_sequence(dist, n_max, seed);
    out.r_at = count_trees_at(sequence, out.checkpoints);
    for (std::size_t k = 0; k < out.checkpoints.size(); ++k) {
        out.ratio.push_back(static_cast<double>(out.r_at[k]) / std::log(static_cast<double>(out.checkpoints[k])));
    }
    out.provenance = provenance_for(dist, seed, 1);
    return out;
}

double final_decade_spread(const ConvergenceSeries& series) {
    if (series.checkpoints.empty()) throw DomainError("empty series");
    const double floor_n = static_cast<double>(series.checkpoints.back()) / 10.0;
    std::vector<double> tail;
    for (std::size_t k = 0; k < series.checkpoints.size(); ++k) {
        if (static_cast<double>(series.checkpoints[k]) >= floor_n) tail.push_back(series.ratio[k]);
    }
    const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
    return (*hi - *lo) / stats::mean(tail);
}

DiscreteEstimate estimate_c_discrete(const OffspringDistribution& dist, std::size_t n, std::size_t replicas,
                                     std::uint64_t seed, int jobs) {
    require_replicas(replicas);
    if (n < 100) throw DomainError("estimate_c_discrete needs n >= 100 for the two-decade slope");
    DiscreteEstimate out;
    out.checkpoints = {n / 100, n / 10, n};
    std::vector<std::vector<std::uint64_t>> r(replicas);
    for_each_replica(replicas, jobs, [&](std::size_t i) {
        const auto sequence = generate_sequence(dist, n, seed + i);
        r[i] = count_trees_at(sequence, out.checkpoints);
    });

    std::vector<double> x;
    for (auto k : out.checkpoints) x.push_back(std::log(static_cast<double>(k)));
    const double x_bar = stats::mean(x);
    double sxx = 0.0;
    for (double v : x) sxx += (v - x_bar) * (v - x_bar);

    std::vector<double> ratios, slopes;
    out.mean_r.assign(out.checkpoints.size(), 0.0);
    for (const auto& path : r) {
        ratios.push_back(static_cast<double>(path.back()) / x.back());
        double sxy = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            sxy += (x[k] - x_bar) * static_cast<double>(path[k]);
            out.mean_r[k] += static_cast<double>(path[k]) / static_cast<double>(replicas);
        }
        slopes.push_back(sxy / sxx);
    }
    out.ratio = make_estimate(ratios, EstimateMethod::ratio_at_n, static_cast<double>(n));
    out.slope = make_estimate(slopes, EstimateMethod::slope_vs_logn, static_cast<double>(n));
    out.slope_lower_decade = (out.mean_r[1] - out.mean_r[0]) / (x[1] - x[0]);
    out.slope_upper_decade = (out.mean_r[2] - out.mean_r[1]) / (x[2] - x[1]);
    if (dist.is_dirac_one()) {
        out.warning = "offspring law is the point mass at 1: R(n) grows like sqrt(n), not log n, so R(n)/log n has no finite limit";
    }
    out.provenance = provenance_for(dist, seed, replicas);
    return out;
}

StripEstimate estimate_r_inf(const OffspringDistribution& dist, const std::vector<double>& widths,
                             std::size_t replicas, std::uint64_t seed, bool coupled, double horizon_lo,
                             double horizon_hi, int jobs) {
    require_replicas(replicas);
    if (widths.empty()) throw DomainError("estimate_r_inf needs at least one width");
    for (std::size_t k = 0; k < widths.size(); ++k) {
        if (!(widths[k] > 0.0) || (k > 0 && !(widths[k] > widths[k - 1]))) {
            throw DomainError("widths must be positive and strictly increasing");
        }
    }
    if (!(horizon_lo >= 0.0 && horizon_lo < horizon_hi)) throw DomainError("need 0 <= horizon_lo < horizon_hi");

    StripEstimate out;
    out.widths = widths;
    out.coupled = coupled;
    out.horizon_lo = horizon_lo;
    out.horizon_hi = horizon_hi;
    out.per_replica.assign(replicas, std::vector<std::uint64_t>(widths.size(), 0));
    for_each_replica(replicas, jobs, [&](std::size_t i) {
        if (coupled) {
            const AtomField widest = sample_field(0.0, widths.back(), horizon_hi, dist, seed + i);
            for (std::size_t k = 0; k < widths.size(); ++k) {
                const auto rep = simulate(restrict_field(widest, 0.0, widths[k], 0.0, horizon_hi));
                out.per_replica[i][k] = count_roots(rep, horizon_lo, horizon_hi);
            }
        } else {
            for (std::size_t k = 0; k < widths.size(); ++k) {
                const AtomField field = sample_field(0.0, widths[k], horizon_hi, dist, seed + k * replicas + i);
                out.per_replica[i][k] = count_roots(simulate(field), horizon_lo, horizon_hi);
            }
        }
    });
    for (std::size_t k = 0; k < widths.size(); ++k) {
        std::vector<double> column;
        for (const auto& row : out.per_replica) column.push_back(static_cast<double>(row[k]));
        out.estimates.push_back(make_estimate(column, EstimateMethod::strip_window, widths[k]));
    }
    out.provenance = provenance_for(dist, seed, replicas);
    return out;
}

namespace {

/// Window counts for windows i_min..i_max on the strip [0,width], one row per replica.
std::vector<std::vector<std::uint64_t>> window_count_table(const OffspringDistribution& dist, double width,
                                                           int i_min, int i_max, std::size_t replicas,
                                                           std::uint64_t seed, int jobs) {
    if (!(width > 0.0)) throw DomainError("strip width must be positive");
    if (i_max < i_min) throw DomainError("empty window range");
    const double horizon = window_edge(i_max + 1);
    std::vector<std::vector<std::uint64_t>> table(replicas);
    for_each_replica(replicas, jobs, [&](std::size_t r) {
        const auto rep = simulate(sample_field(0.0, width, horizon, dist, seed + r));
        table[r] = window_counts(rep, i_min, i_max).counts;
    });
    return table;
}

std::vector<double> column(const std::vector<std::vector<std::uint64_t>>& table, std::size_t k) {
    std::vector<double> out;
    for (const auto& row : table) out.push_back(static_cast<double>(row[k]));
    return out;
}

}  // namespace

StationarityReport stationarity_report(const OffspringDistribution& dist, double width, int i_min, int i_max,
                                       std::size_t replicas, std::uint64_t seed, int jobs) {
    require_replicas(replicas);
    StationarityReport out;
    out.width = width;
    out.i_min = i_min;
    out.i_max = i_max;
    out.per_replica = window_count_table(dist, width, i_min, i_max, replicas, seed, jobs);
    for (int i = i_min; i <= i_max; ++i) {
        const auto iv = stats::mean_interval(column(out.per_replica, static_cast<std::size_t>(i - i_min)));
        out.rows.push_back({i, iv.mean, iv.std_error, iv.low, iv.high});
    }
    for (std::size_t p = 0; p < out.rows.size(); ++p) {
        for (std::size_t q = p + 1; q < out.rows.size(); ++q) {
            const auto& x = out.rows[p];
            const auto& y = out.rows[q];
            const double se = std::sqrt(x.std_error * x.std_error + y.std_error * y.std_error);
            const double z = se > 0.0 ? (x.mean - y.mean) / se : 0.0;
            out.pairs.push_back({x.i, y.i, z, std::abs(z) > 3.0});
            out.max_abs_z = std::max(out.max_abs_z, std::abs(z));
        }
    }
    out.provenance = provenance_for(dist, seed, replicas);
    return out;
}

DecorrelationReport decorrelation_report(const OffspringDistribution& dist, double width, int i_min, int lag_max,
                                         std::size_t replicas, std::uint64_t seed, int jobs) {
    require_replicas(replicas);
    if (lag_max < 0) throw DomainError("lag_max must be >= 0");
    DecorrelationReport out;
    out.width = width;
    out.i_min = i_min;
    const auto table = window_count_table(dist, width, i_min, i_min + lag_max, replicas, seed, jobs);
    const auto first = column(table, 0);
    for (int lag = 0; lag <= lag_max; ++lag) {
        out.lags.push_back(lag);
        out.correlation.push_back(lag == 0 ? 1.0 : stats::correlation(first, column(table, static_cast<std::size_t>(lag))));
    }
    out.provenance = provenance_for(dist, seed, replicas);
    return out;
}

ScalingComparison compare_scaled(const AtomField& field, double c, double rel_tol) {
    const GraphicalRep base = simulate(field);
    const GraphicalRep scaled = simulate(scale_field(field, c));
    ScalingComparison out;
    auto close = [&](double expected, double got) {
        const double scale = std::max(std::abs(expected), std::abs(got));
        const double err = scale == 0.0 ? 0.0 : std::abs(expected - got) / scale;
        out.max_rel_error = std::max(out.max_rel_error, err);
        return err <= rel_tol;
    };
    if (base.h_lines.size() != scaled.h_lines.size() || base.v_lines.size() != scaled.v_lines.size()) {
        out.equal = false;
        out.mismatches = 1;
        return out;
    }
    bool strip_ok = close(c * base.a, scaled.a);
    strip_ok = close(c * base.b, scaled.b) && strip_ok;
    strip_ok = close(base.horizon / c, scaled.horizon) && strip_ok;
    if (!strip_ok) ++out.mismatches;
    for (std::size_t k = 0; k < base.h_lines.size(); ++k) {
        const HLine& h = base.h_lines[k];
        const HLine& g = scaled.h_lines[k];
        bool ok = h.rootless == g.rootless;
        ok = close(h.t / c, g.t) && ok;
        ok = close(c * h.x_left, g.x_left) && ok;
        ok = close(c * h.x_right, g.x_right) && ok;
        if (!ok) ++out.mismatches;
        ++out.lines_compared;
    }
    for (std::size_t k = 0; k < base.v_lines.size(); ++k) {
        const VLine& v = base.v_lines[k];
        const VLine& w = scaled.v_lines[k];
        bool ok = v.open == w.open;
        ok = close(c * v.x, w.x) && ok;
        ok = close(v.t_birth / c, w.t_birth) && ok;
        ok = close(v.t_death / c, w.t_death) && ok;
        if (!ok) ++out.mismatches;
        ++out.lines_compared;
    }
    out.equal = out.mismatches == 0;
    return out;
}

ScalingReport scaling_check(const OffspringDistribution& dist, double a, double b, double horizon, double c,
                            std::uint64_t seed, std::size_t ks_pairs, int jobs) {
    if (!(c > 0.0)) throw DomainError("scale factor must be positive");
    ScalingReport out;
    out.coupling = compare_scaled(sample_field(a, b, horizon, dist, seed), c);
    out.ks_pairs = ks_pairs;
    if (ks_pairs >= 2) {
        std::vector<double> original(ks_pairs), mapped(ks_pairs);
        for_each_replica(ks_pairs, jobs, [&](std::size_t k) {
            const auto f = sample_field(a, b, horizon, dist, seed + 1 + k);
            original[k] = static_cast<double>(count_roots(simulate(f), 0.0, horizon));
            const auto g = sample_field(c * a, c * b, horizon / c, dist, seed + 1 + ks_pairs + k);
            mapped[k] = static_cast<double>(count_roots(simulate(g), 0.0, horizon / c));
        });
        out.ks_statistic = stats::ks_statistic(original, mapped);
        out.ks_threshold = stats::ks_critical(0.001, ks_pairs, ks_pairs);
        out.ks_pass = out.ks_statistic < out.ks_threshold;
    }
    out.pass = out.coupling.equal && out.ks_pass;
    out.provenance = provenance_for(dist, seed, ks_pairs);
    return out;
}

}  // namespace gwheaps
