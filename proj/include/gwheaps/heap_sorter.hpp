#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "gwheaps/alive_set.hpp"
#include "gwheaps/offspring.hpp"

namespace gwheaps {

/// One element of the input stream: a label and the capacity drawn for it.
struct SequenceItem {
    double label = 0.0;
    std::int64_t capacity = 1;

    friend bool operator==(const SequenceItem&, const SequenceItem&) = default;
};

struct Vertex {
    std::size_t id = 0;
    double label = 0.0;
    std::int64_t capacity = 1;
    std::optional<std::size_t> parent;
    std::size_t arrival_index = 0;
};

/// Labeled forest built by the streaming algorithm. Vertex ids equal arrival indices.
struct HeapForest {
    std::vector<Vertex> vertices;
    std::vector<std::size_t> roots;

    std::size_t tree_count() const { return roots.size(); }
    /// Children of every vertex, in arrival order.
    std::vector<std::vector<std::size_t>> children() const;
};

/// Where an inserted element went.
struct Placement {
    bool new_root = true;
    std::size_t parent = 0;  ///< meaningful only when !new_root

    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Per-step tree counts; r_values[n-1] = R(n). placements is empty in trace-only mode.
struct SortTrace {
    std::vector<std::uint64_t> r_values;
    std::vector<Placement> placements;
};

/// Streaming greedy sorter: each new element becomes a child of the alive
/// vertex with the largest label strictly below its own, or opens a new tree.
class HeapSorter {
public:
    /// Throws ValidationError on a label already seen or a capacity below 1.
    Placement insert(double label, std::int64_t capacity);

    const HeapForest& forest() const { return forest_; }
    const SortTrace& trace() const { return trace_; }
    const AliveSet& alive() const { return alive_; }
    std::uint64_t tree_count() const { return forest_.roots.size(); }

private:
    AliveSet alive_;
    HeapForest forest_;
    SortTrace trace_;
    std::unordered_set<double> seen_;
};

struct SortResult {
    HeapForest forest;
    SortTrace trace;
};

/// Runs the streaming sorter over a whole sequence. Throws ValidationError
/// naming the first duplicated label.
SortResult run(std::span<const SequenceItem> sequence);

/// R(n) from a trace; throws DomainError unless 1 <= n <= trace length.
std::uint64_t tree_count(const SortTrace& trace, std::size_t n);

/// i.i.d. labels uniform on (0,1) and capacities from dist; per element the
/// label word is drawn first, then the capacity word.
std::vector<SequenceItem> generate_sequence(const OffspringDistribution& dist, std::size_t n, std::uint64_t seed);

/// R(k) at each requested k (1-based, nondecreasing, each <= sequence size).
///
/// Offline kernel over the rank-indexed alive set; equal labels never serve
/// as each other's parent, matching the strict predecessor rule.
std::vector<std::uint64_t> count_trees_at(std::span<const SequenceItem> sequence,
                                          std::span<const std::size_t> checkpoints);

/// Full per-step R(n) from the offline kernel.
std::vector<std::uint64_t> count_trees_all(std::span<const SequenceItem> sequence);

enum class TraceMode { full, trace_only };

struct RandomRun {
    SortTrace trace;
    std::optional<HeapForest> forest;  ///< present in full mode
};

/// Random input of length n sorted by the algorithm. Full mode uses the
/// streaming sorter and keeps the forest; trace-only mode keeps R(n) alone.
RandomRun run_random(const OffspringDistribution& dist, std::size_t n, std::uint64_t seed,
                     TraceMode mode = TraceMode::trace_only);

}  // namespace gwheaps
