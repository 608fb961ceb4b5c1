#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gwheaps::stats {

/// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

double mean(std::span<const double> xs);
/// Unbiased sample variance; needs at least two values.
double sample_variance(std::span<const double> xs);

struct Interval {
    double mean = 0.0;
    double std_error = 0.0;
    double low = 0.0;
    double high = 0.0;
};

/// Normal-approximation 95% interval for the mean.
Interval mean_interval(std::span<const double> xs);

/// Pearson correlation; NaN when either sample is constant.
double correlation(std::span<const double> xs, std::span<const double> ys);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_x - F_y|.
double ks_statistic(std::vector<double> xs, std::vector<double> ys);

/// Asymptotic two-sample KS rejection threshold at significance alpha.
double ks_critical(double alpha, std::size_t n, std::size_t m);

struct ChiSquare {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Goodness of fit of nonnegative integer counts to Poisson(mean). Tail bins
/// are pooled until every expected frequency is at least 5.
ChiSquare chi_square_poisson(std::span<const std::uint64_t> counts, double poisson_mean);

}  // namespace gwheaps::stats
