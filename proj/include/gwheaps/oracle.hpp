#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gwheaps/heap_sorter.hpp"

namespace gwheaps::oracle {

/// Largest input accepted by min_heap_partition.
inline constexpr std::size_t kMaxExhaustive = 12;

/// Fewest trees over every online placement of the sequence: each arriving
/// element may open a tree or join any alive vertex with a smaller label.
/// Exhaustive depth-first search memoized on the (label rank, lives) state.
/// Throws DomainError above kMaxExhaustive elements.
std::size_t min_heap_partition(std::span<const SequenceItem> sequence);

/// Longest strictly decreasing subsequence, patience method on negated labels.
std::size_t lds_length(std::span<const double> labels);

/// Same quantity by the O(n^2) dynamic program.
std::size_t lds_length_quadratic(std::span<const double> labels);

struct ForestReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks heap order, capacity bounds, arrival order, root bookkeeping and
/// that the vertices are exactly the input sequence. Never throws.
ForestReport check_forest_valid(const HeapForest& forest, std::span<const SequenceItem> sequence);

}  // namespace gwheaps::oracle
