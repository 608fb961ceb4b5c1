#include "gwheaps/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "gwheaps/errors.hpp"

namespace gwheaps::oracle {

namespace {

using State = std::vector<std::pair<std::uint8_t, std::int64_t>>;  // sorted (rank, lives)

class PartitionSearch {
public:
    explicit PartitionSearch(std::span<const SequenceItem> sequence) : sequence_(sequence), rank_(sequence.size()) {
        std::vector<std::size_t> order(sequence.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](auto x, auto y) { return sequence[x].label < sequence[y].label; });
        for (std::size_t k = 0; k < order.size(); ++k) rank_[order[k]] = static_cast<std::uint8_t>(k);
    }

    std::size_t solve() { return 1 + best(with({}, rank_[0], clamp_lives(sequence_[0].capacity, 1)), 1); }

private:
    // Lives beyond the number of remaining arrivals cannot be used up.
    std::int64_t clamp_lives(std::int64_t lives, std::size_t step) const {
        return std::min<std::int64_t>(lives, static_cast<std::int64_t>(sequence_.size() - step));
    }

    static State with(State state, std::uint8_t rank, std::int64_t lives) {
        if (lives > 0) state.insert(std::lower_bound(state.begin(), state.end(), std::pair{rank, lives}), {rank, lives});
        return state;
    }

    std::size_t best(const State& state, std::size_t step) {
        if (step == sequence_.size()) return 0;
        auto key = std::pair{step, state};
        if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;

        const std::uint8_t r = rank_[step];
        const std::int64_t lives = clamp_lives(sequence_[step].capacity, step + 1);
        std::size_t result = 1 + best(with(state, r, lives), step + 1);
        for (std::size_t j = 0; j < state.size() && state[j].first < r; ++j) {
            State next = state;
            if (--next[j].second == 0) next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
            result = std::min(result, best(with(std::move(next), r, lives), step + 1));
            if (result == 0) break;
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    std::span<const SequenceItem> sequence_;
    std::vector<std::uint8_t> rank_;
    std::map<std::pair<std::size_t, State>, std::size_t> memo_;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::size_t min_heap_partition(std::span<const SequenceItem> sequence) {
    if (sequence.size() > kMaxExhaustive) {
        throw DomainError("min_heap_partition refuses n=" + std::to_string(sequence.size()) + " (bound is " +
                          std::to_string(kMaxExhaustive) + ")");
    }
    if (sequence.empty()) return 0;
    std::vector<double> labels;
    for (const auto& item : sequence) labels.push_back(item.label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw ValidationError("min_heap_partition needs distinct labels");
    }
    return PartitionSearch(sequence).solve();
}

std::size_t lds_length(std::span<const double> labels) {
    std::vector<double> tails;  // tails[k]: smallest tail of an increasing run of length k+1 in -labels
    for (double x : labels) {
        const double v = -x;
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) {
            tails.push_back(v);
        } else {
            *it = v;
        }
    }
    return tails.size();
}

std::size_t lds_length_quadratic(std::span<const double> labels) {
    std::vector<std::size_t> longest(labels.size(), 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (labels[j] > labels[i]) longest[i] = std::max(longest[i], longest[j] + 1);
        }
        best = std::max(best, longest[i]);
    }
    return best;
}

ForestReport check_forest_valid(const HeapForest& forest, std::span<const SequenceItem> sequence) {
    ForestReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    const auto& vs = forest.vertices;
    std::vector<std::size_t> child_count(vs.size(), 0);
    std::vector<std::size_t> parentless;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vertex& v = vs[i];
        if (v.id != i) fail("vertex at index " + std::to_string(i) + " has id " + std::to_string(v.id));
        if (!v.parent) {
            parentless.push_back(i);
            continue;
        }
        const std::size_t p = *v.parent;
        if (p >= vs.size() || p == i) {
            fail("vertex " + std::to_string(i) + " has invalid parent " + std::to_string(p));
            continue;
        }
        ++child_count[p];
        if (!(v.label > vs[p].label)) {
            fail("heap order violated on edge " + std::to_string(p) + " (" + fmt(vs[p].label) + ") -> " +
                 std::to_string(i) + " (" + fmt(v.label) + ")");
        }
        if (!(v.arrival_index > vs[p].arrival_index)) {
            fail("arrival order violated on edge " + std::to_string(p) + " -> " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].capacity < 1) fail("vertex " + std::to_string(i) + " has capacity below 1");
        if (static_cast<std::int64_t>(child_count[i]) > vs[i].capacity) {
            fail("vertex " + std::to_string(i) + " has " + std::to_string(child_count[i]) + " children, capacity " +
                 std::to_string(vs[i].capacity));
        }
    }
    auto roots = forest.roots;
    std::sort(roots.begin(), roots.end());
    if (roots != parentless) fail("root list does not match the parentless vertices");

    std::vector<std::pair<double, std::int64_t>> have, want;
    for (const Vertex& v : vs) have.emplace_back(v.label, v.capacity);
    for (const auto& item : sequence) want.emplace_back(item.label, item.capacity);
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have != want) fail("vertex multiset differs from the input sequence");
    return report;
}

}  // namespace gwheaps::oracle
