#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwheaps/rng.hpp"

namespace gwheaps {

/// Law of the per-vertex capacity (maximum number of children) on {1,2,...}.
///
/// Three families: a point mass, a geometric law with
/// P(nu = k) = p (1-p)^(k-1), and a finite explicit pmf. Immutable after
/// construction and safe to share between replicas.
class OffspringDistribution {
public:
    enum class Kind { dirac, geometric, explicit_pmf };

    static OffspringDistribution dirac(std::int64_t k);
    static OffspringDistribution geometric(double p);
    /// Entries are (value, probability); zero-probability entries are dropped.
    static OffspringDistribution explicit_pmf(std::vector<std::pair<std::int64_t, double>> pmf);

    Kind kind() const { return kind_; }
    std::int64_t dirac_value() const { return dirac_value_; }
    double geometric_p() const { return geometric_p_; }
    const std::vector<std::pair<std::int64_t, double>>& pmf() const { return pmf_; }

    /// True iff the law is the point mass at 1 (the chain / Ulam case).
    bool is_dirac_one() const;

    /// Largest support value, or 0 when the support is unbounded.
    std::int64_t max_support() const;

    bool in_support(std::int64_t value) const;

    double mean() const;

    /// Draws one capacity. Every kind consumes exactly one engine word per
    /// call (the point mass included), so the stream position after n draws
    /// is independent of the law.
    std::int64_t sample(Rng& rng) const;

    /// Canonical spec text; parse_spec(to_spec()) reproduces the law.
    std::string to_spec() const;

    friend bool operator==(const OffspringDistribution&, const OffspringDistribution&) = default;

private:
    OffspringDistribution() = default;

    Kind kind_ = Kind::dirac;
    std::int64_t dirac_value_ = 1;
    double geometric_p_ = 1.0;
    std::vector<std::pair<std::int64_t, double>> pmf_;
    std::vector<double> cdf_;
};

/// Parses `dirac:<k>`, `geom:<p>` or `pmf:<p1>,<p2>,...` where the i-th pmf
/// entry is P(nu = i). Throws ParseError on malformed text and
/// ValidationError on an invalid law.
OffspringDistribution parse_spec(std::string_view spec);

}  // namespace gwheaps
