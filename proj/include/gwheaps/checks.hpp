#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwheaps/hammersley.hpp"
#include "gwheaps/heap_sorter.hpp"

namespace gwheaps::checks {

enum class Suite { optimality, ulam, scaling, monotonicity, restriction, timechange };

/// Throws ParseError on an unknown name.
Suite parse_suite(const std::string& name);
const char* suite_name(Suite suite);

/// Everything needed to replay a failing trial.
struct Counterexample {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string description;
    std::vector<SequenceItem> sequence;  ///< sorter-based suites
    std::optional<AtomField> field;      ///< particle-system suites
    std::optional<GraphicalRep> rep;
};

struct CheckResult {
    Suite suite = Suite::optimality;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::optional<Counterexample> counterexample;  ///< first failure

    bool ok() const { return passed == trials; }
};

struct CheckOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string mu_spec = "dirac:2";
    std::size_t ulam_n = 10000;   ///< sequence length for the ulam suite
    double horizon = 50.0;        ///< box height of the timechange suite
};

/// Trial k uses seed + k. Field boxes: scaling [0,5]x(0,5], monotonicity
/// [0,4]x(0,8], restriction [-1,1]x(0,8], timechange [0,1]x(0,horizon]. Suites:
///  optimality   greedy R(k) equals the exhaustive optimum on every prefix (n <= 8, capacities 1..3)
///  ulam         capacity-one R(n) equals the longest decreasing subsequence
///  scaling      simulate(scale(F,c)) equals the mapped simulation, c in {e, 1/e, 3.7}
///  monotonicity right extension [0,1] -> [0,4] keeps root lines; deleting atoms below 1 never lowers crossings
///  restriction  restricting the left boundary leaves the interior diagram unchanged
///  timechange   roots over (0, t(n)] on [0,1] equal the sorter's R(n)
CheckResult run_suite(Suite suite, const CheckOptions& options);

}  // namespace gwheaps::checks
