#include "gwheaps/checks.hpp"

#include <numbers>
#include <random>
#include <set>

#include "gwheaps/errors.hpp"
#include "gwheaps/estimator.hpp"
#include "gwheaps/oracle.hpp"

namespace gwheaps::checks {

namespace {

struct Trial {
    bool ok = true;
    Counterexample cx;
};

std::vector<SequenceItem> sequence_of(const AtomField& field) {
    std::vector<SequenceItem> out;
    for (const auto& at : field.atoms()) out.push_back({at.u, at.nu});
    return out;
}

Trial optimality_trial(std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.next_word() % 8;
    std::vector<SequenceItem> seq;
    for (std::size_t i = 0; i < n; ++i) {
        const double label = rng.uniform_open();
        seq.push_back({label, static_cast<std::int64_t>(1 + rng.next_word() % 3)});
    }
    Trial t;
    const auto trace = run(seq).trace;
    for (std::size_t k = 1; k <= n && t.ok; ++k) {
        const auto optimum = oracle::min_heap_partition(std::span<const SequenceItem>(seq.data(), k));
        if (trace.r_values[k - 1] != optimum) {
            t.ok = false;
            t.cx.description = "prefix " + std::to_string(k) + ": greedy " + std::to_string(trace.r_values[k - 1]) +
                               ", optimum " + std::to_string(optimum);
        }
    }
    t.cx.sequence = std::move(seq);
    return t;
}

Trial ulam_trial(std::uint64_t seed, std::size_t n) {
    Trial t;
    t.cx.sequence = generate_sequence(OffspringDistribution::dirac(1), n, seed);
    std::vector<double> labels;
    for (const auto& item : t.cx.sequence) labels.push_back(item.label);
    const auto r = count_trees_all(t.cx.sequence).back();
    const auto lds = oracle::lds_length(labels);
    if (r != lds) {
        t.ok = false;
        t.cx.description = "R(n)=" + std::to_string(r) + " but LDS=" + std::to_string(lds);
    }
    return t;
}

Trial scaling_trial(std::uint64_t seed, const OffspringDistribution& dist) {
    Trial t;
    const auto field = sample_field(0.0, 5.0, 5.0, dist, seed);
    for (double c : {std::numbers::e, 1.0 / std::numbers::e, 3.7}) {
        const auto cmp = compare_scaled(field, c);
        if (!cmp.equal) {
            t.ok = false;
            t.cx.description = "scale factor " + std::to_string(c) + ": " + std::to_string(cmp.mismatches) +
                               " mismatched lines, max relative error " + std::to_string(cmp.max_rel_error);
            t.cx.field = field;
            t.cx.rep = simulate(field);
            break;
        }
    }
    return t;
}

Trial monotonicity_trial(std::uint64_t seed, const OffspringDistribution& dist) {
    Trial t;
    const auto field = sample_field(0.0, 4.0, 8.0, dist, seed);
    const double top = field.horizon();
    const auto unit = simulate(restrict_field(field, 0.0, 1.0, 0.0, top));
    const auto wide = simulate(field);
    std::set<double> wide_heights;
    for (double h : crossing_heights(wide, 0.0)) wide_heights.insert(h);
    for (const auto& h : unit.h_lines) {
        if (h.rootless && !wide_heights.contains(h.t)) {
            t.ok = false;
            t.cx.description = "root line at height " + std::to_string(h.t) + " of [0,1] missing from [0,4]";
            t.cx.field = field;
            t.cx.rep = unit;
            return t;
        }
    }
    const double s = 1.0;
    if (s < top) {
        const auto unit_field = restrict_field(field, 0.0, 1.0, 0.0, top);
        const auto before = count_crossings(simulate(unit_field), 0.0, s, top);
        const auto cut = simulate(restrict_field(unit_field, 0.0, 1.0, s, top));
        const auto after = count_crossings(cut, 0.0, s, top);
        if (after < before) {
            t.ok = false;
            t.cx.description = "deleting atoms below 1 lowered crossings from " + std::to_string(before) + " to " +
                               std::to_string(after);
            t.cx.field = unit_field;
            t.cx.rep = cut;
        }
    }
    return t;
}

Trial restriction_trial(std::uint64_t seed, const OffspringDistribution& dist) {
    Trial t;
    const auto field = sample_field(-1.0, 1.0, 8.0, dist, seed);
    const auto wide = simulate(field);
    const auto narrow = simulate(restrict_field(field, 0.0, 1.0, 0.0, field.horizon()));
    std::set<std::pair<double, double>> a, b;
    for (const auto& h : wide.h_lines) {
        if (h.x_left > 0.0) a.emplace(h.t, h.x_right);
    }
    for (const auto& h : narrow.h_lines) {
        if (h.x_left > 0.0) b.emplace(h.t, h.x_right);
    }
    std::vector<VLine> va;
    for (const auto& v : wide.v_lines) {
        if (v.x > 0.0) va.push_back(v);
    }
    if (a != b || va != narrow.v_lines) {
        t.ok = false;
        t.cx.description = "interior of the restricted diagram differs";
        t.cx.field = field;
        t.cx.rep = wide;
    }
    return t;
}

Trial timechange_trial(std::uint64_t seed, const OffspringDistribution& dist, double horizon) {
    Trial t;
    const auto field = sample_field(0.0, 1.0, horizon, dist, seed);
    const auto rep = simulate(field);
    const auto trace = run(sequence_of(field)).trace;
    for (std::size_t n = 1; n <= field.size(); ++n) {
        const auto roots = count_roots(rep, 0.0, field.atoms()[n - 1].t);
        if (roots != trace.r_values[n - 1]) {
            t.ok = false;
            t.cx.description = "n=" + std::to_string(n) + ": roots " + std::to_string(roots) + ", sorter R " +
                               std::to_string(trace.r_values[n - 1]);
            t.cx.field = field;
            t.cx.rep = rep;
            break;
        }
    }
    return t;
}

}  // namespace

Suite parse_suite(const std::string& name) {
    for (Suite s : {Suite::optimality, Suite::ulam, Suite::scaling, Suite::monotonicity, Suite::restriction,
                    Suite::timechange}) {
        if (name == suite_name(s)) return s;
    }
    throw ParseError("unknown check suite '" + name + "'");
}

const char* suite_name(Suite suite) {
    switch (suite) {
        case Suite::optimality: return "optimality";
        case Suite::ulam: return "ulam";
        case Suite::scaling: return "scaling";
        case Suite::monotonicity: return "monotonicity";
        case Suite::restriction: return "restriction";
        case Suite::timechange: return "timechange";
    }
    return "?";
}

CheckResult run_suite(Suite suite, const CheckOptions& options) {
    const auto dist = parse_spec(options.mu_spec);
    CheckResult result;
    result.suite = suite;
    result.trials = options.trials;
    for (std::size_t k = 0; k < options.trials; ++k) {
        const std::uint64_t seed = options.seed + k;
        Trial t;
        switch (suite) {
            case Suite::optimality: t = optimality_trial(seed); break;
            case Suite::ulam: t = ulam_trial(seed, options.ulam_n); break;
            case Suite::scaling: t = scaling_trial(seed, dist); break;
            case Suite::monotonicity: t = monotonicity_trial(seed, dist); break;
            case Suite::restriction: t = restriction_trial(seed, dist); break;
            case Suite::timechange: t = timechange_trial(seed, dist, options.horizon); break;
        }
        if (t.ok) {
            ++result.passed;
        } else if (!result.counterexample) {
            t.cx.trial = k;
            t.cx.seed = seed;
            result.counterexample = std::move(t.cx);
        }
    }
    return result;
}

}  // namespace gwheaps::checks
