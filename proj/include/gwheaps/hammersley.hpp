#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "gwheaps/poisson_field.hpp"

namespace gwheaps {

/// Horizontal segment at height t joining a new particle to its father, or
/// to the strip's left boundary when it has none (rootless).
struct HLine {
    double t = 0.0;
    double x_left = 0.0;
    double x_right = 0.0;
    bool rootless = false;

    friend bool operator==(const HLine&, const HLine&) = default;
};

/// Vertical segment: lifetime of the particle at x. Particles still alive at
/// the horizon are open, with t_death set to the horizon.
struct VLine {
    double x = 0.0;
    double t_birth = 0.0;
    double t_death = 0.0;
    bool open = true;

    friend bool operator==(const VLine&, const VLine&) = default;
};

/// Line diagram of the particle system on a strip (a,b) x (0,horizon].
///
/// h_lines[i] and v_lines[i] both belong to the i-th atom of the simulated
/// field (time order), so h_lines are sorted by height.
struct GraphicalRep {
    double a = 0.0;
    double b = 1.0;
    double horizon = 1.0;
    std::vector<HLine> h_lines;
    std::vector<VLine> v_lines;

    friend bool operator==(const GraphicalRep&, const GraphicalRep&) = default;
};

/// X_i = rootless lines in (base^i, base^(i+1)] for i in [i_min, i_max].
struct WindowCounts {
    double base = std::numbers::e;
    int i_min = 0;
    int i_max = -1;
    std::vector<std::uint64_t> counts;
};

/// Event-driven simulation over the rank-indexed alive set.
GraphicalRep simulate(const AtomField& field);

/// Same dynamics over the std::map alive set; kept as the reference path.
GraphicalRep simulate_reference(const AtomField& field);

/// Rootless lines with height in (s, t]. Requires 0 <= s < t <= horizon.
std::uint64_t count_roots(const GraphicalRep& rep, double s, double t);

/// Lines with height in (s, t] and x_left <= x < x_right. Requires a <= x < b.
std::uint64_t count_crossings(const GraphicalRep& rep, double x, double s, double t);

/// Heights, in increasing order, of the lines crossing the vertical at x.
std::vector<double> crossing_heights(const GraphicalRep& rep, double x);

/// base^i, computed as exp(i) for base e so callers can size horizons exactly.
double window_edge(int i, double base = std::numbers::e);

/// Requires window_edge(i_max+1) <= horizon; an empty range gives an empty list.
WindowCounts window_counts(const GraphicalRep& rep, int i_min, int i_max, double base = std::numbers::e);

/// Standalone SVG: a cross per atom, a vertical per particle lifetime and a
/// horizontal per father link. Elements carry classes `atom`, `vline`,
/// `hline` (plus `rootless`) so they can be counted.
std::string render_svg(const GraphicalRep& rep, const AtomField& field, int width_px, int height_px);

}  // namespace gwheaps
