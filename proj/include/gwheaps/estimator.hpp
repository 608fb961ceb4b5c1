#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gwheaps/offspring.hpp"
#include "gwheaps/poisson_field.hpp"

namespace gwheaps {

inline constexpr const char* kVersion = "0.1.0";

/// Inputs that determine a report, embedded in every serialized output.
struct Provenance {
    std::string dist_spec;
    std::uint64_t seed = 0;
    std::size_t replicas = 1;
    std::string version = kVersion;
};

/// R(n) and R(n)/log n along one realization, at geometric checkpoints.
struct ConvergenceSeries {
    std::vector<std::size_t> checkpoints;
    std::vector<std::uint64_t> r_at;
    std::vector<double> ratio;
    Provenance provenance;
};

/// round(10^(j/per_decade)) for j >= 1, deduplicated, values >= 2, plus n_max.
std::vector<std::size_t> geometric_checkpoints(std::size_t n_max, int per_decade);

/// One trajectory of the streaming sorter. Requires n_max >= 10.
ConvergenceSeries trajectory(const OffspringDistribution& dist, std::size_t n_max, int per_decade,
                             std::uint64_t seed);

/// (max - min) / mean of the ratio over checkpoints in [n_max/10, n_max].
double final_decade_spread(const ConvergenceSeries& series);

enum class EstimateMethod { ratio_at_n, slope_vs_logn, strip_window };
const char* method_name(EstimateMethod method);

/// Replica mean with a normal-approximation 95% interval.
struct CEstimate {
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double std_error = 0.0;
    std::size_t replicas = 0;
    EstimateMethod method = EstimateMethod::ratio_at_n;
    double n_or_width = 0.0;
};

/// Both discrete estimators of c_mu from one set of replicas.
///
/// ratio: mean of R(n)/log n. slope: least-squares slope of R against log k
/// over k in {n/100, n/10, n}, computed per replica (the slope is linear in
/// the data, so its replica mean is the slope of the mean curve).
struct DiscreteEstimate {
    CEstimate ratio;
    CEstimate slope;
    std::vector<std::size_t> checkpoints;    ///< n/100, n/10, n
    std::vector<double> mean_r;              ///< mean R at each checkpoint
    double slope_lower_decade = 0.0;         ///< (mean R(n/10) - mean R(n/100)) / log 10
    double slope_upper_decade = 0.0;         ///< (mean R(n) - mean R(n/10)) / log 10
    std::optional<std::string> warning;      ///< set for the point mass at 1
    Provenance provenance;
};

/// Replica i uses seed + i. Requires replicas >= 2 and n >= 100.
DiscreteEstimate estimate_c_discrete(const OffspringDistribution& dist, std::size_t n, std::size_t replicas,
                                     std::uint64_t seed, int jobs = 0);

/// Rootless-line counts on strips [0,W] over the window (horizon_lo, horizon_hi].
struct StripEstimate {
    std::vector<double> widths;
    std::vector<CEstimate> estimates;
    std::vector<std::vector<std::uint64_t>> per_replica;  ///< [replica][width]
    bool coupled = true;
    double horizon_lo = 1.0;
    double horizon_hi = std::numbers::e;
    Provenance provenance;
};

/// Coupled mode samples one field on the widest strip per replica and
/// restricts it to each width, so per-replica counts are nondecreasing in W.
/// Uncoupled mode samples each width independently. Widths must be strictly
/// increasing and replicas >= 2.
StripEstimate estimate_r_inf(const OffspringDistribution& dist, const std::vector<double>& widths,
                             std::size_t replicas, std::uint64_t seed, bool coupled = true,
                             double horizon_lo = 1.0, double horizon_hi = std::numbers::e, int jobs = 0);

struct WindowSummary {
    int i = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

struct PairwiseZ {
    int i = 0;
    int j = 0;
    double z = 0.0;
    bool flagged = false;  ///< |z| > 3
};

/// Window counts X_i = R[e^i, e^(i+1)] on the strip [0,width] across replicas.
struct StationarityReport {
    double width = 0.0;
    int i_min = 0;
    int i_max = 0;
    std::vector<WindowSummary> rows;
    std::vector<PairwiseZ> pairs;
    double max_abs_z = 0.0;
    std::vector<std::vector<std::uint64_t>> per_replica;  ///< [replica][i - i_min]
    Provenance provenance;
};

StationarityReport stationarity_report(const OffspringDistribution& dist, double width, int i_min, int i_max,
                                       std::size_t replicas, std::uint64_t seed, int jobs = 0);

/// Sample correlation of (X_{i_min}, X_{i_min+lag}) across replicas, lag = 0..lag_max.
struct DecorrelationReport {
    double width = 0.0;
    int i_min = 0;
    std::vector<int> lags;
    std::vector<double> correlation;  ///< NaN when a window count is constant
    Provenance provenance;
};

DecorrelationReport decorrelation_report(const OffspringDistribution& dist, double width, int i_min, int lag_max,
                                         std::size_t replicas, std::uint64_t seed, int jobs = 0);

/// Line-by-line comparison of simulate(scale(F,c)) with the image of simulate(F).
struct ScalingComparison {
    bool equal = true;
    std::size_t lines_compared = 0;
    std::size_t mismatches = 0;
    double max_rel_error = 0.0;
};

inline constexpr double kScalingRelTolerance = 1e-12;

ScalingComparison compare_scaled(const AtomField& field, double c, double rel_tol = kScalingRelTolerance);

struct ScalingReport {
    ScalingComparison coupling;
    double ks_statistic = 0.0;
    double ks_threshold = 0.0;
    std::size_t ks_pairs = 0;
    bool ks_pass = true;
    bool pass = true;
    Provenance provenance;
};

/// Deterministic coupling on the field sampled from `seed`, plus a two-sample
/// KS test of root counts on (a,b)x(0,horizon] against (ca,cb)x(0,horizon/c]
/// over ks_pairs independent seeds, at significance 0.001.
ScalingReport scaling_check(const OffspringDistribution& dist, double a, double b, double horizon, double c,
                            std::uint64_t seed, std::size_t ks_pairs = 1000, int jobs = 0);

}  // namespace gwheaps
