#include "gwheaps/heap_sorter.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>

#include "gwheaps/errors.hpp"

namespace gwheaps {

namespace {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::vector<std::vector<std::size_t>> HeapForest::children() const {
    std::vector<std::vector<std::size_t>> out(vertices.size());
    for (const Vertex& v : vertices) {
        if (v.parent) out[*v.parent].push_back(v.id);
    }
    return out;
}

Placement HeapSorter::insert(double label, std::int64_t capacity) {
    if (capacity < 1) throw ValidationError("capacity must be >= 1, got " + std::to_string(capacity));
    if (!seen_.insert(label).second) throw ValidationError("duplicate label " + fmt17(label));

    const std::size_t id = forest_.vertices.size();
    Placement placement;
    auto father = alive_.predecessor(label);
    if (father == alive_.end()) {
        forest_.roots.push_back(id);
        forest_.vertices.push_back({id, label, capacity, std::nullopt, id});
    } else {
        placement = {false, father->second.vertex};
        forest_.vertices.push_back({id, label, capacity, father->second.vertex, id});
        alive_.consume_life(father);
    }
    alive_.insert(label, capacity, id);
    trace_.r_values.push_back(forest_.roots.size());
    trace_.placements.push_back(placement);
    return placement;
}

SortResult run(std::span<const SequenceItem> sequence) {
    std::vector<double> labels(sequence.size());
    std::transform(sequence.begin(), sequence.end(), labels.begin(), [](const auto& it) { return it.label; });
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return labels[x] < labels[y]; });
    // First collision in arrival order: the earliest second occurrence.
    std::size_t first_dup = sequence.size();
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (labels[order[k]] == labels[order[k - 1]]) first_dup = std::min(first_dup, order[k]);
    }
    if (first_dup != sequence.size()) {
        throw ValidationError("duplicate label " + fmt17(labels[first_dup]) + " at position " +
                              std::to_string(first_dup + 1));
    }

    HeapSorter sorter;
    for (const auto& item : sequence) sorter.insert(item.label, item.capacity);
    return {sorter.forest(), sorter.trace()};
}

std::uint64_t tree_count(const SortTrace& trace, std::size_t n) {
    if (n < 1 || n > trace.r_values.size()) {
        throw DomainError("tree_count: n=" + std::to_string(n) + " outside [1," +
                          std::to_string(trace.r_values.size()) + "]");
    }
    return trace.r_values[n - 1];
}

std::vector<SequenceItem> generate_sequence(const OffspringDistribution& dist, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SequenceItem> out(n);
    for (auto& item : out) {
        item.label = rng.uniform_open();
        item.capacity = dist.sample(rng);
    }
    return out;
}

namespace {

/// Shared offline kernel; `emit(step, R)` is called after every insertion.
template <class Emit>
void sort_offline(std::span<const SequenceItem> sequence, Emit&& emit) {
    const std::size_t n = sequence.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return sequence[x].label < sequence[y].label || (sequence[x].label == sequence[y].label && x < y);
    });
    // rank[i]: slot of element i; bound[i]: first slot of its equal-label group.
    std::vector<std::uint32_t> rank(n), bound(n);
    std::uint32_t group_start = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
        if (k > 0 && sequence[order[k]].label != sequence[order[k - 1]].label) group_start = k;
        rank[order[k]] = k;
        bound[order[k]] = group_start;
    }
    order = {};

    RankedAliveSet alive(n);
    std::uint64_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t father = alive.predecessor(bound[i]);
        if (father == RankedAliveSet::npos) {
            ++roots;
        } else {
            alive.consume_life(father);
        }
        alive.insert(rank[i], sequence[i].capacity);
        emit(i + 1, roots);
    }
}

}  // namespace

std::vector<std::uint64_t> count_trees_at(std::span<const SequenceItem> sequence,
                                          std::span<const std::size_t> checkpoints) {
    for (std::size_t k = 0; k < checkpoints.size(); ++k) {
        if (checkpoints[k] < 1 || checkpoints[k] > sequence.size() || (k > 0 && checkpoints[k] < checkpoints[k - 1])) {
            throw DomainError("checkpoints must be nondecreasing within [1, sequence length]");
        }
    }
    std::vector<std::uint64_t> out;
    out.reserve(checkpoints.size());
    std::size_t next = 0;
    sort_offline(sequence, [&](std::size_t step, std::uint64_t roots) {
        while (next < checkpoints.size() && checkpoints[next] == step) {
            out.push_back(roots);
            ++next;
        }
    });
    return out;
}

std::vector<std::uint64_t> count_trees_all(std::span<const SequenceItem> sequence) {
    std::vector<std::uint64_t> out;
    out.reserve(sequence.size());
    sort_offline(sequence, [&](std::size_t, std::uint64_t roots) { out.push_back(roots); });
    return out;
}

RandomRun run_random(const OffspringDistribution& dist, std::size_t n, std::uint64_t seed, TraceMode mode) {
    if (n < 1) throw DomainError("run_random needs n >= 1");
    const auto sequence = generate_sequence(dist, n, seed);
    RandomRun out;
    if (mode == TraceMode::full) {
        // Sampled labels coincide with probability ~n^2 2^-53; the streaming
        // sorter rejects that case, so fall through to the offline kernel.
        try {
            auto result = run(sequence);
            out.trace = std::move(result.trace);
            out.forest = std::move(result.forest);
            return out;
        } catch (const ValidationError&) {
        }
    }
    out.trace.r_values = count_trees_all(sequence);
    return out;
}

}  // namespace gwheaps
