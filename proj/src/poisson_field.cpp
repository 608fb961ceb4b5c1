#include "gwheaps/poisson_field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "gwheaps/errors.hpp"

namespace gwheaps {

namespace {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void require_box(double a, double b, double horizon) {
    if (!(a < b)) throw DomainError("strip needs a < b, got a=" + fmt17(a) + " b=" + fmt17(b));
    if (!(horizon > 0.0)) throw DomainError("horizon must be positive, got " + fmt17(horizon));
}

}  // namespace

AtomField::AtomField(double a, double b, double horizon, std::vector<Atom> atoms, std::uint64_t seed)
    : a_(a), b_(b), horizon_(horizon), atoms_(std::move(atoms)), seed_(seed) {
    require_box(a_, b_, horizon_);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Atom& at = atoms_[i];
        if (!(at.u > a_ && at.u < b_)) {
            throw ValidationError("atom " + std::to_string(i) + " position " + fmt17(at.u) + " outside (" +
                                  fmt17(a_) + "," + fmt17(b_) + ")");
        }
        if (!(at.t > 0.0 && at.t <= horizon_)) {
            throw ValidationError("atom " + std::to_string(i) + " time " + fmt17(at.t) + " outside (0," +
                                  fmt17(horizon_) + "]");
        }
        if (at.nu < 1) throw ValidationError("atom " + std::to_string(i) + " has capacity below 1");
        if (i > 0 && !(atoms_[i - 1].t < at.t)) {
            throw ValidationError("atom times not strictly increasing at index " + std::to_string(i));
        }
    }
    std::vector<double> positions(atoms_.size());
    std::transform(atoms_.begin(), atoms_.end(), positions.begin(), [](const Atom& at) { return at.u; });
    std::sort(positions.begin(), positions.end());
    if (auto dup = std::adjacent_find(positions.begin(), positions.end()); dup != positions.end()) {
        throw ValidationError("duplicate atom position " + fmt17(*dup));
    }
}

AtomField sample_field(double a, double b, double horizon, const OffspringDistribution& dist,
                       std::uint64_t seed) {
    require_box(a, b, horizon);
    Rng rng(seed);
    std::poisson_distribution<std::int64_t> count_law((b - a) * horizon);
    const auto count = static_cast<std::size_t>(count_law(rng.engine()));

    std::vector<Atom> atoms;
    atoms.reserve(count);
    auto draw = [&] {
        Atom at;
        do {
            at.u = a + (b - a) * rng.uniform_open();
        } while (!(at.u > a && at.u < b));
        at.t = horizon * rng.uniform_open();
        at.nu = dist.sample(rng);
        return at;
    };
    for (std::size_t i = 0; i < count; ++i) atoms.push_back(draw());

    // Coincident coordinates have probability zero in the continuum; the
    // later atom is redrawn from the continuing stream.
    for (bool redrawn = true; redrawn;) {
        redrawn = false;
        std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.u < y.u; });
        for (std::size_t i = 1; i < atoms.size(); ++i) {
            if (atoms[i].u == atoms[i - 1].u) {
                atoms[i] = draw();
                redrawn = true;
            }
        }
        std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.t < y.t; });
        for (std::size_t i = 1; i < atoms.size(); ++i) {
            if (atoms[i].t == atoms[i - 1].t) {
                atoms[i] = draw();
                redrawn = true;
            }
        }
    }
    return AtomField(a, b, horizon, std::move(atoms), seed);
}

AtomField restrict_field(const AtomField& field, double a2, double b2, double s, double t2) {
    if (!(a2 >= field.a() && b2 <= field.b() && a2 < b2)) {
        throw DomainError("restriction strip (" + fmt17(a2) + "," + fmt17(b2) + ") not inside (" +
                          fmt17(field.a()) + "," + fmt17(field.b()) + ")");
    }
    if (!(s >= 0.0 && s <= t2 && t2 <= field.horizon())) {
        throw DomainError("restriction window (" + fmt17(s) + "," + fmt17(t2) + "] not inside (0," +
                          fmt17(field.horizon()) + "]");
    }
    std::vector<Atom> kept;
    for (const Atom& at : field.atoms()) {
        if (at.u > a2 && at.u < b2 && at.t > s && at.t <= t2) kept.push_back(at);
    }
    // The restricted box keeps the parent's horizon when the window is empty,
    // since a zero-height box is not a valid field.
    const double horizon = t2 > 0.0 ? t2 : field.horizon();
    return AtomField(a2, b2, horizon, std::move(kept), field.seed());
}

AtomField scale_field(const AtomField& field, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("scale factor must be positive, got " + fmt17(c));
    std::vector<Atom> mapped;
    mapped.reserve(field.size());
    for (const Atom& at : field.atoms()) mapped.push_back({c * at.u, at.t / c, at.nu});
    std::stable_sort(mapped.begin(), mapped.end(), [](const Atom& x, const Atom& y) { return x.t < y.t; });
    return AtomField(c * field.a(), c * field.b(), field.horizon() / c, std::move(mapped), field.seed());
}

AtomField shift_time(const AtomField& field, double shift) {
    if (!(shift >= 0.0 && shift < field.horizon())) {
        throw DomainError("time shift " + fmt17(shift) + " outside [0, horizon)");
    }
    std::vector<Atom> moved;
    for (const Atom& at : field.atoms()) {
        if (at.t > shift) moved.push_back({at.u, at.t - shift, at.nu});
    }
    return AtomField(field.a(), field.b(), field.horizon() - shift, std::move(moved), field.seed());
}

void write_atoms_csv(std::ostream& out, const AtomField& field) {
    out << "u,t,nu\n";
    for (const Atom& at : field.atoms()) out << fmt17(at.u) << ',' << fmt17(at.t) << ',' << at.nu << '\n';
}

std::string atoms_csv(const AtomField& field) {
    std::ostringstream out;
    write_atoms_csv(out, field);
    return out.str();
}

AtomField read_atoms_csv(std::istream& in, double a, double b, double horizon) {
    std::string line;
    if (!std::getline(in, line) || line != "u,t,nu") throw ParseError("atom CSV: missing header 'u,t,nu'");
    std::vector<Atom> atoms;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        Atom at;
        char c1 = 0, c2 = 0;
        std::istringstream fields(line);
        if (!(fields >> at.u >> c1 >> at.t >> c2 >> at.nu) || c1 != ',' || c2 != ',') {
            throw ParseError("atom CSV: malformed row " + std::to_string(row) + ": '" + line + "'");
        }
        atoms.push_back(at);
    }
    return AtomField(a, b, horizon, std::move(atoms));
}

}  // namespace gwheaps
