#include "gwheaps/hammersley.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "gwheaps/alive_set.hpp"
#include "gwheaps/errors.hpp"

namespace gwheaps {

namespace {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

GraphicalRep empty_rep(const AtomField& field) {
    GraphicalRep rep;
    rep.a = field.a();
    rep.b = field.b();
    rep.horizon = field.horizon();
    rep.h_lines.reserve(field.size());
    rep.v_lines.reserve(field.size());
    return rep;
}

void require_window(const GraphicalRep& rep, double s, double t) {
    if (!(s >= 0.0 && s < t && t <= rep.horizon)) {
        throw DomainError("window (" + fmt17(s) + "," + fmt17(t) + "] must satisfy 0 <= s < t <= horizon=" +
                          fmt17(rep.horizon));
    }
}

}  // namespace

GraphicalRep simulate(const AtomField& field) {
    const auto& atoms = field.atoms();
    const std::size_t n = atoms.size();
    std::vector<std::uint32_t> by_position(n);
    std::iota(by_position.begin(), by_position.end(), 0u);
    std::sort(by_position.begin(), by_position.end(),
              [&](std::uint32_t x, std::uint32_t y) { return atoms[x].u < atoms[y].u; });
    std::vector<std::uint32_t> rank(n);
    for (std::uint32_t k = 0; k < n; ++k) rank[by_position[k]] = k;

    GraphicalRep rep = empty_rep(field);
    RankedAliveSet alive(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Atom& at = atoms[i];
        const std::size_t father = alive.predecessor(rank[i]);
        if (father == RankedAliveSet::npos) {
            rep.h_lines.push_back({at.t, field.a(), at.u, true});
        } else {
            const std::size_t father_atom = by_position[father];
            rep.h_lines.push_back({at.t, atoms[father_atom].u, at.u, false});
            if (alive.consume_life(father)) {
                rep.v_lines[father_atom].t_death = at.t;
                rep.v_lines[father_atom].open = false;
            }
        }
        rep.v_lines.push_back({at.u, at.t, field.horizon(), true});
        alive.insert(rank[i], at.nu);
    }
    return rep;
}

GraphicalRep simulate_reference(const AtomField& field) {
    GraphicalRep rep = empty_rep(field);
    AliveSet alive;
    const auto& atoms = field.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const Atom& at = atoms[i];
        auto father = alive.predecessor(at.u);
        if (father == alive.end()) {
            rep.h_lines.push_back({at.t, field.a(), at.u, true});
        } else {
            const std::size_t father_atom = father->second.vertex;
            rep.h_lines.push_back({at.t, father->first, at.u, false});
            if (alive.consume_life(father)) {
                rep.v_lines[father_atom].t_death = at.t;
                rep.v_lines[father_atom].open = false;
            }
        }
        rep.v_lines.push_back({at.u, at.t, field.horizon(), true});
        alive.insert(at.u, at.nu, i);
    }
    return rep;
}

std::uint64_t count_roots(const GraphicalRep& rep, double s, double t) {
    require_window(rep, s, t);
    auto first = std::upper_bound(rep.h_lines.begin(), rep.h_lines.end(), s,
                                  [](double v, const HLine& h) { return v < h.t; });
    std::uint64_t count = 0;
    for (auto it = first; it != rep.h_lines.end() && it->t <= t; ++it) count += it->rootless ? 1 : 0;
    return count;
}

std::uint64_t count_crossings(const GraphicalRep& rep, double x, double s, double t) {
    if (!(x >= rep.a && x < rep.b)) {
        throw DomainError("crossing abscissa " + fmt17(x) + " outside [" + fmt17(rep.a) + "," + fmt17(rep.b) + ")");
    }
    require_window(rep, s, t);
    auto first = std::upper_bound(rep.h_lines.begin(), rep.h_lines.end(), s,
                                  [](double v, const HLine& h) { return v < h.t; });
    std::uint64_t count = 0;
    for (auto it = first; it != rep.h_lines.end() && it->t <= t; ++it) {
        if (it->x_left <= x && x < it->x_right) ++count;
    }
    return count;
}

std::vector<double> crossing_heights(const GraphicalRep& rep, double x) {
    std::vector<double> out;
    for (const HLine& h : rep.h_lines) {
        if (h.x_left <= x && x < h.x_right) out.push_back(h.t);
    }
    return out;
}

double window_edge(int i, double base) {
    return base == std::numbers::e ? std::exp(static_cast<double>(i)) : std::pow(base, i);
}

WindowCounts window_counts(const GraphicalRep& rep, int i_min, int i_max, double base) {
    WindowCounts out;
    out.base = base;
    out.i_min = i_min;
    out.i_max = i_max;
    if (i_max < i_min) return out;
    const double top = window_edge(i_max + 1, base);
    if (top > rep.horizon) {
        throw DomainError("window_counts needs horizon >= " + fmt17(top) + ", have " + fmt17(rep.horizon));
    }
    for (int i = i_min; i <= i_max; ++i) {
        out.counts.push_back(count_roots(rep, window_edge(i, base), window_edge(i + 1, base)));
    }
    return out;
}

std::string render_svg(const GraphicalRep& rep, const AtomField& field, int width_px, int height_px) {
    if (width_px <= 0 || height_px <= 0) throw DomainError("SVG dimensions must be positive");
    const double margin = 30.0;
    const double plot_w = std::max(1.0, width_px - 2 * margin);
    const double plot_h = std::max(1.0, height_px - 2 * margin);
    auto px = [&](double x) { return margin + (x - rep.a) / (rep.b - rep.a) * plot_w; };
    auto py = [&](double t) { return margin + plot_h - t / rep.horizon * plot_h; };

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
        << R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")" << width_px << R"(" height=")"
        << height_px << R"(" viewBox="0 0 )" << width_px << ' ' << height_px << R"(">)" << '\n';
    out << R"( <rect class="frame" x=")" << margin << R"(" y=")" << margin << R"(" width=")" << plot_w
        << R"(" height=")" << plot_h << R"(" fill="white" stroke="black" stroke-width="1"/>)" << '\n';
    out << R"( <text class="axis" x=")" << margin << R"(" y=")" << (margin + plot_h + 15)
        << R"(" font-size="10" text-anchor="middle">)" << fmt17(rep.a) << "</text>\n";
    out << R"( <text class="axis" x=")" << (margin + plot_w) << R"(" y=")" << (margin + plot_h + 15)
        << R"(" font-size="10" text-anchor="middle">)" << fmt17(rep.b) << "</text>\n";
    out << R"( <text class="axis" x=")" << (margin - 4) << R"(" y=")" << (margin + 4)
        << R"(" font-size="10" text-anchor="end">)" << fmt17(rep.horizon) << "</text>\n";

    for (const VLine& v : rep.v_lines) {
        out << R"( <line class="vline" x1=")" << px(v.x) << R"(" y1=")" << py(v.t_birth) << R"(" x2=")" << px(v.x)
            << R"(" y2=")" << py(v.t_death) << R"(" stroke="#1f4e99" stroke-width="1"/>)" << '\n';
    }
    for (const HLine& h : rep.h_lines) {
        out << R"( <line class=")" << (h.rootless ? "hline rootless" : "hline") << R"(" x1=")" << px(h.x_left)
            << R"(" y1=")" << py(h.t) << R"(" x2=")" << px(h.x_right) << R"(" y2=")" << py(h.t) << R"(" stroke=")"
            << (h.rootless ? "#b22222" : "black") << R"(" stroke-width="1"/>)" << '\n';
    }
    const double arm = 3.0;
    for (const Atom& at : field.atoms()) {
        const double cx = px(at.u);
        const double cy = py(at.t);
        out << R"( <path class="atom" d="M)" << (cx - arm) << ' ' << (cy - arm) << 'L' << (cx + arm) << ' '
            << (cy + arm) << 'M' << (cx - arm) << ' ' << (cy + arm) << 'L' << (cx + arm) << ' ' << (cy - arm)
            << R"(" stroke="black" stroke-width="1"/>)" << '\n';
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gwheaps
