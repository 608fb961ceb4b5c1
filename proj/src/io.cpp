#include "gwheaps/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gwheaps/errors.hpp"

namespace gwheaps::io {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json tree_to_json(const HeapForest& forest, const std::vector<std::vector<std::size_t>>& children, std::size_t root) {
    // Iterative post-order so deep chains (capacity 1) do not exhaust the stack.
    std::vector<json> built(forest.vertices.size());
    std::vector<std::pair<std::size_t, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [v, expanded] = stack.back();
        stack.pop_back();
        if (!expanded) {
            stack.emplace_back(v, true);
            for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.emplace_back(*it, false);
            continue;
        }
        json node = {{"label", forest.vertices[v].label}, {"capacity", forest.vertices[v].capacity}};
        json kids = json::array();
        for (auto c : children[v]) kids.push_back(std::move(built[c]));
        node["children"] = std::move(kids);
        built[v] = std::move(node);
    }
    return std::move(built[root]);
}

}  // namespace

json forest_to_json(const HeapForest& forest) {
    const auto children = forest.children();
    json trees = json::array();
    for (auto root : forest.roots) trees.push_back(tree_to_json(forest, children, root));
    return trees;
}

void write_trace_csv(std::ostream& out, const SortTrace& trace) {
    out << "n,R\n";
    for (std::size_t k = 0; k < trace.r_values.size(); ++k) out << (k + 1) << ',' << trace.r_values[k] << '\n';
}

void write_sequence_csv(std::ostream& out, const std::vector<SequenceItem>& sequence) {
    out << "label,capacity\n";
    for (const auto& item : sequence) out << fmt17(item.label) << ',' << item.capacity << '\n';
}

std::vector<SequenceItem> read_sequence_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("label,capacity", 0) != 0) {
        throw ParseError("sequence CSV: missing header 'label,capacity'");
    }
    std::vector<SequenceItem> out;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        SequenceItem item;
        char comma = 0;
        std::istringstream fields(line);
        if (!(fields >> item.label >> comma >> item.capacity) || comma != ',') {
            throw ParseError("sequence CSV: malformed row " + std::to_string(row) + ": '" + line + "'");
        }
        out.push_back(item);
    }
    return out;
}

json rep_to_json(const GraphicalRep& rep) {
    json h = json::array();
    for (const auto& l : rep.h_lines) h.push_back({{"t", l.t}, {"x0", l.x_left}, {"x1", l.x_right}, {"rootless", l.rootless}});
    json v = json::array();
    for (const auto& l : rep.v_lines) v.push_back({{"x", l.x}, {"t0", l.t_birth}, {"t1", l.t_death}, {"open", l.open}});
    return {{"strip", {rep.a, rep.b}}, {"horizon", rep.horizon}, {"h_lines", std::move(h)}, {"v_lines", std::move(v)}};
}

GraphicalRep rep_from_json(const json& j) {
    try {
        GraphicalRep rep;
        rep.a = j.at("strip").at(0).get<double>();
        rep.b = j.at("strip").at(1).get<double>();
        rep.horizon = j.at("horizon").get<double>();
        for (const auto& l : j.at("h_lines")) {
            rep.h_lines.push_back({l.at("t").get<double>(), l.at("x0").get<double>(), l.at("x1").get<double>(),
                                   l.at("rootless").get<bool>()});
        }
        for (const auto& l : j.at("v_lines")) {
            rep.v_lines.push_back({l.at("x").get<double>(), l.at("t0").get<double>(), l.at("t1").get<double>(),
                                   l.at("open").get<bool>()});
        }
        return rep;
    } catch (const json::exception& e) {
        throw ParseError(std::string("graphical representation JSON: ") + e.what());
    }
}

json to_json(const Provenance& p) {
    return {{"dist", p.dist_spec}, {"seed", p.seed}, {"replicas", p.replicas}, {"version", p.version}};
}

json to_json(const CEstimate& e) {
    return {{"method", method_name(e.method)}, {"point", e.point},          {"ci_low", e.ci_low},
            {"ci_high", e.ci_high},            {"std_error", e.std_error}, {"replicas", e.replicas},
            {e.method == EstimateMethod::strip_window ? "width" : "n", e.n_or_width}};
}

json to_json(const ConvergenceSeries& s) {
    json rows = json::array();
    for (std::size_t k = 0; k < s.checkpoints.size(); ++k) {
        rows.push_back({{"n", s.checkpoints[k]}, {"R", s.r_at[k]}, {"ratio", number_or_null(s.ratio[k])}});
    }
    return {{"provenance", to_json(s.provenance)}, {"checkpoints", std::move(rows)}};
}

json to_json(const DiscreteEstimate& e) {
    json j = {{"provenance", to_json(e.provenance)},
              {"ratio", to_json(e.ratio)},
              {"slope", to_json(e.slope)},
              {"checkpoints", e.checkpoints},
              {"mean_R", e.mean_r},
              {"slope_lower_decade", e.slope_lower_decade},
              {"slope_upper_decade", e.slope_upper_decade},
              {"warning", e.warning ? json(*e.warning) : json(nullptr)}};
    return j;
}

json to_json(const StripEstimate& e) {
    json est = json::array();
    for (const auto& x : e.estimates) est.push_back(to_json(x));
    return {{"provenance", to_json(e.provenance)}, {"coupled", e.coupled},   {"window", {e.horizon_lo, e.horizon_hi}},
            {"widths", e.widths},                  {"estimates", std::move(est)}, {"per_replica", e.per_replica}};
}

json to_json(const StationarityReport& r) {
    json rows = json::array();
    for (const auto& w : r.rows) {
        rows.push_back({{"i", w.i}, {"mean", w.mean}, {"std_error", w.std_error}, {"ci_low", w.ci_low}, {"ci_high", w.ci_high}});
    }
    json pairs = json::array();
    for (const auto& p : r.pairs) pairs.push_back({{"i", p.i}, {"j", p.j}, {"z", p.z}, {"flagged", p.flagged}});
    return {{"provenance", to_json(r.provenance)}, {"width", r.width},
            {"i_range", {r.i_min, r.i_max}},       {"rows", std::move(rows)},
            {"pairs", std::move(pairs)},           {"max_abs_z", r.max_abs_z}};
}

json to_json(const DecorrelationReport& r) {
    json rows = json::array();
    for (std::size_t k = 0; k < r.lags.size(); ++k) {
        rows.push_back({{"lag", r.lags[k]}, {"correlation", number_or_null(r.correlation[k])}});
    }
    return {{"provenance", to_json(r.provenance)}, {"width", r.width}, {"i_min", r.i_min}, {"lags", std::move(rows)}};
}

json to_json(const ScalingReport& r) {
    return {{"provenance", to_json(r.provenance)},
            {"coupling",
             {{"equal", r.coupling.equal},
              {"lines_compared", r.coupling.lines_compared},
              {"mismatches", r.coupling.mismatches},
              {"max_rel_error", r.coupling.max_rel_error}}},
            {"ks", {{"statistic", r.ks_statistic}, {"threshold", r.ks_threshold}, {"pairs", r.ks_pairs}, {"pass", r.ks_pass}}},
            {"pass", r.pass}};
}

std::string to_csv(const ConvergenceSeries& s) {
    std::ostringstream out;
    out << "n,R,ratio\n";
    for (std::size_t k = 0; k < s.checkpoints.size(); ++k) {
        out << s.checkpoints[k] << ',' << s.r_at[k] << ',' << fmt17(s.ratio[k]) << '\n';
    }
    return out.str();
}

namespace {

void estimate_row(std::ostream& out, const CEstimate& e) {
    out << method_name(e.method) << ',' << fmt17(e.n_or_width) << ',' << fmt17(e.point) << ',' << fmt17(e.ci_low) << ','
        << fmt17(e.ci_high) << ',' << fmt17(e.std_error) << ',' << e.replicas << '\n';
}

constexpr const char* kEstimateHeader = "method,n_or_width,point,ci_low,ci_high,std_error,replicas\n";

}  // namespace

std::string to_csv(const DiscreteEstimate& e) {
    std::ostringstream out;
    out << kEstimateHeader;
    estimate_row(out, e.ratio);
    estimate_row(out, e.slope);
    return out.str();
}

std::string to_csv(const StripEstimate& e) {
    std::ostringstream out;
    out << kEstimateHeader;
    for (const auto& x : e.estimates) estimate_row(out, x);
    return out.str();
}

std::string replicas_csv(const StripEstimate& e) {
    std::ostringstream out;
    out << "replica";
    for (double w : e.widths) out << ",W=" << fmt17(w);
    out << '\n';
    for (std::size_t i = 0; i < e.per_replica.size(); ++i) {
        out << i;
        for (auto c : e.per_replica[i]) out << ',' << c;
        out << '\n';
    }
    return out.str();
}

std::string to_csv(const StationarityReport& r) {
    std::ostringstream out;
    out << "i,mean,std_error,ci_low,ci_high\n";
    for (const auto& w : r.rows) {
        out << w.i << ',' << fmt17(w.mean) << ',' << fmt17(w.std_error) << ',' << fmt17(w.ci_low) << ','
            << fmt17(w.ci_high) << '\n';
    }
    return out.str();
}

std::string to_csv(const DecorrelationReport& r) {
    std::ostringstream out;
    out << "lag,correlation\n";
    for (std::size_t k = 0; k < r.lags.size(); ++k) out << r.lags[k] << ',' << fmt17(r.correlation[k]) << '\n';
    return out.str();
}

}  // namespace gwheaps::io
