#include "gwheaps/offspring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gwheaps/errors.hpp"

namespace gwheaps {

namespace {

constexpr double kPmfSumTolerance = 1e-9;

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

double parse_real(const std::string& token, std::string_view spec) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError("offspring spec '" + std::string(spec) + "': bad number '" + token + "'");
    }
    return value;
}

std::int64_t parse_integer(const std::string& token, std::string_view spec) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("offspring spec '" + std::string(spec) + "': bad integer '" + token + "'");
    }
    return value;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

OffspringDistribution OffspringDistribution::dirac(std::int64_t k) {
    if (k < 1) {
        throw ValidationError("dirac offspring law needs k >= 1, got " + std::to_string(k));
    }
    OffspringDistribution d;
    d.kind_ = Kind::dirac;
    d.dirac_value_ = k;
    return d;
}

OffspringDistribution OffspringDistribution::geometric(double p) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw ValidationError("geometric offspring law needs p in (0,1], got " + format_real(p));
    }
    OffspringDistribution d;
    d.kind_ = Kind::geometric;
    d.geometric_p_ = p;
    return d;
}

OffspringDistribution OffspringDistribution::explicit_pmf(std::vector<std::pair<std::int64_t, double>> pmf) {
    std::erase_if(pmf, [](const auto& e) { return e.second == 0.0; });
    if (pmf.empty()) throw ValidationError("explicit pmf has no positive entries");
    std::sort(pmf.begin(), pmf.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const auto& [value, prob] = pmf[i];
        if (value < 1) throw ValidationError("pmf support value " + std::to_string(value) + " is below 1");
        if (i > 0 && pmf[i - 1].first == value) {
            throw ValidationError("pmf repeats support value " + std::to_string(value));
        }
        if (!(prob > 0.0 && prob <= 1.0)) {
            throw ValidationError("pmf probability " + format_real(prob) + " outside (0,1]");
        }
        sum += prob;
    }
    if (std::abs(sum - 1.0) > kPmfSumTolerance) {
        throw ValidationError("pmf sums to " + format_real(sum) + ", not 1");
    }
    OffspringDistribution d;
    d.kind_ = Kind::explicit_pmf;
    d.pmf_ = std::move(pmf);
    double acc = 0.0;
    for (const auto& e : d.pmf_) {
        acc += e.second;
        d.cdf_.push_back(acc);
    }
    d.cdf_.back() = 1.0;
    return d;
}

bool OffspringDistribution::is_dirac_one() const {
    switch (kind_) {
        case Kind::dirac: return dirac_value_ == 1;
        case Kind::geometric: return geometric_p_ == 1.0;
        case Kind::explicit_pmf: return pmf_.size() == 1 && pmf_.front().first == 1;
    }
    return false;
}

std::int64_t OffspringDistribution::max_support() const {
    switch (kind_) {
        case Kind::dirac: return dirac_value_;
        case Kind::geometric: return geometric_p_ == 1.0 ? 1 : 0;
        case Kind::explicit_pmf: return pmf_.back().first;
    }
    return 0;
}

bool OffspringDistribution::in_support(std::int64_t value) const {
    switch (kind_) {
        case Kind::dirac: return value == dirac_value_;
        case Kind::geometric: return value >= 1 && (geometric_p_ < 1.0 || value == 1);
        case Kind::explicit_pmf:
            return std::any_of(pmf_.begin(), pmf_.end(), [&](const auto& e) { return e.first == value; });
    }
    return false;
}

double OffspringDistribution::mean() const {
    switch (kind_) {
        case Kind::dirac: return static_cast<double>(dirac_value_);
        case Kind::geometric: return 1.0 / geometric_p_;
        case Kind::explicit_pmf: {
            double m = 0.0;
            for (const auto& [v, p] : pmf_) m += static_cast<double>(v) * p;
            return m;
        }
    }
    return 0.0;
}

std::int64_t OffspringDistribution::sample(Rng& rng) const {
    const double u = rng.uniform_open();
    switch (kind_) {
        case Kind::dirac: return dirac_value_;
        case Kind::geometric: {
            if (geometric_p_ == 1.0) return 1;
            // Inversion: P(nu > k) = (1-p)^k.
            const double k = std::floor(std::log(u) / std::log1p(-geometric_p_));
            return 1 + static_cast<std::int64_t>(k);
        }
        case Kind::explicit_pmf: {
            auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
            return pmf_[static_cast<std::size_t>(it - cdf_.begin())].first;
        }
    }
    return 1;
}

std::string OffspringDistribution::to_spec() const {
    switch (kind_) {
        case Kind::dirac: return "dirac:" + std::to_string(dirac_value_);
        case Kind::geometric: return "geom:" + format_real(geometric_p_);
        case Kind::explicit_pmf: {
            std::ostringstream out;
            out << "pmf:";
            std::int64_t next = 1;
            for (const auto& [value, prob] : pmf_) {
                for (; next < value; ++next) out << "0,";
                out << format_real(prob);
                if (value != pmf_.back().first) out << ',';
                next = value + 1;
            }
            return out.str();
        }
    }
    return {};
}

OffspringDistribution parse_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("offspring spec '" + std::string(spec) + "': expected <kind>:<args>");
    }
    const std::string kind = trim(spec.substr(0, colon));
    const std::string_view args = spec.substr(colon + 1);
    if (kind == "dirac") return OffspringDistribution::dirac(parse_integer(trim(args), spec));
    if (kind == "geom") return OffspringDistribution::geometric(parse_real(trim(args), spec));
    if (kind == "pmf") {
        std::vector<std::pair<std::int64_t, double>> pmf;
        std::int64_t value = 1;
        std::size_t start = 0;
        while (true) {
            const auto comma = args.find(',', start);
            const auto token = trim(args.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                       : comma - start));
            pmf.emplace_back(value++, parse_real(token, spec));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return OffspringDistribution::explicit_pmf(std::move(pmf));
    }
    throw ParseError("offspring spec '" + std::string(spec) + "': unknown kind '" + kind + "'");
}

}  // namespace gwheaps
