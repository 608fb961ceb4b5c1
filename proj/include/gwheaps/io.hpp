#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwheaps/estimator.hpp"
#include "gwheaps/hammersley.hpp"
#include "gwheaps/heap_sorter.hpp"

namespace gwheaps::io {

using nlohmann::json;

/// Array of trees, each a recursive {label, capacity, children:[...]} object.
json forest_to_json(const HeapForest& forest);

/// CSV `n,R`, one row per insertion.
void write_trace_csv(std::ostream& out, const SortTrace& trace);

/// CSV `label,capacity` at 17 significant digits.
void write_sequence_csv(std::ostream& out, const std::vector<SequenceItem>& sequence);
std::vector<SequenceItem> read_sequence_csv(std::istream& in);

/// {strip:[a,b], horizon, h_lines:[{t,x0,x1,rootless}], v_lines:[{x,t0,t1,open}]}.
/// Doubles are written in shortest round-trip form, so reading back is lossless.
json rep_to_json(const GraphicalRep& rep);
GraphicalRep rep_from_json(const json& j);

json to_json(const Provenance& p);
json to_json(const CEstimate& e);
json to_json(const ConvergenceSeries& s);
json to_json(const DiscreteEstimate& e);
json to_json(const StripEstimate& e);
json to_json(const StationarityReport& r);
json to_json(const DecorrelationReport& r);
json to_json(const ScalingReport& r);

/// Tabular cores: one row per estimate / checkpoint / window / lag.
std::string to_csv(const ConvergenceSeries& s);
std::string to_csv(const DiscreteEstimate& e);
std::string to_csv(const StripEstimate& e);
/// Per-replica strip counts, one column per width.
std::string replicas_csv(const StripEstimate& e);
std::string to_csv(const StationarityReport& r);
std::string to_csv(const DecorrelationReport& r);

/// %.17g.
std::string fmt17(double x);

}  // namespace gwheaps::io
