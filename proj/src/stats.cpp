#include "gwheaps/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "gwheaps/errors.hpp"

namespace gwheaps::stats {

double mean(std::span<const double> xs) {
    if (xs.empty()) throw DomainError("mean of an empty sample");
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw DomainError("sample variance needs at least two values");
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return ss / static_cast<double>(xs.size() - 1);
}

Interval mean_interval(std::span<const double> xs) {
    Interval out;
    out.mean = mean(xs);
    out.std_error = std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
    out.low = out.mean - kZ95 * out.std_error;
    out.high = out.mean + kZ95 * out.std_error;
    return out;
}

double correlation(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("correlation needs two paired samples of size >= 2");
    const double mx = mean(xs), my = mean(ys);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / std::sqrt(sxx * syy);
}

double ks_statistic(std::vector<double> xs, std::vector<double> ys) {
    if (xs.empty() || ys.empty()) throw DomainError("KS statistic needs two nonempty samples");
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const double nx = static_cast<double>(xs.size()), ny = static_cast<double>(ys.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < xs.size() && j < ys.size()) {
        const double v = std::min(xs[i], ys[j]);
        while (i < xs.size() && xs[i] == v) ++i;
        while (j < ys.size() && ys[j] == v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    return d;
}

double ks_critical(double alpha, std::size_t n, std::size_t m) {
    const double coeff = std::sqrt(-0.5 * std::log(alpha / 2.0));
    const double dn = static_cast<double>(n), dm = static_cast<double>(m);
    return coeff * std::sqrt((dn + dm) / (dn * dm));
}

ChiSquare chi_square_poisson(std::span<const std::uint64_t> counts, double poisson_mean) {
    if (counts.empty()) throw DomainError("chi-square test on an empty sample");
    const boost::math::poisson_distribution<double> law(poisson_mean);
    const double total = static_cast<double>(counts.size());
    const std::uint64_t top = *std::max_element(counts.begin(), counts.end());

    std::vector<double> observed(top + 1, 0.0);
    for (auto c : counts) observed[c] += 1.0;

    // Cells [lo, hi], merged left to right; the last cell absorbs the upper tail.
    struct Cell {
        double observed = 0.0;
        double expected = 0.0;
    };
    std::vector<Cell> cells;
    Cell current;
    for (std::uint64_t k = 0; k <= top; ++k) {
        current.observed += observed[k];
        current.expected += total * boost::math::pdf(law, static_cast<double>(k));
        if (current.expected >= 5.0) {
            cells.push_back(current);
            current = {};
        }
    }
    current.expected += total * boost::math::cdf(boost::math::complement(law, static_cast<double>(top)));
    if (cells.empty() || current.expected >= 5.0) {
        cells.push_back(current);
    } else {
        cells.back().observed += current.observed;
        cells.back().expected += current.expected;
    }

    ChiSquare out;
    for (const Cell& c : cells) out.statistic += (c.observed - c.expected) * (c.observed - c.expected) / c.expected;
    out.dof = static_cast<int>(cells.size()) - 1;
    if (out.dof >= 1) {
        out.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(out.dof), out.statistic));
    }
    return out;
}

}  // namespace gwheaps::stats
