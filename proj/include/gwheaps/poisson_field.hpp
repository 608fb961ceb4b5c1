#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gwheaps/offspring.hpp"

namespace gwheaps {

/// One point (u, t, nu) of the marked Poisson field: position, arrival time, capacity.
struct Atom {
    double u = 0.0;
    double t = 0.0;
    std::int64_t nu = 1;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Atoms of a Poisson field restricted to the box (a,b) x (0,horizon], sorted by time.
///
/// Construction validates: every atom inside the box, nu >= 1, times strictly
/// increasing, positions pairwise distinct.
class AtomField {
public:
    AtomField(double a, double b, double horizon, std::vector<Atom> atoms, std::uint64_t seed = 0);

    double a() const { return a_; }
    double b() const { return b_; }
    double horizon() const { return horizon_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    friend bool operator==(const AtomField&, const AtomField&) = default;

private:
    double a_;
    double b_;
    double horizon_;
    std::vector<Atom> atoms_;
    std::uint64_t seed_;
};

/// Samples the field on (a,b) x (0,horizon]: a Poisson((b-a) horizon) count,
/// then i.i.d. uniform positions and times and i.i.d. capacities from dist.
/// Pure function of its arguments. Throws DomainError on an empty box.
AtomField sample_field(double a, double b, double horizon, const OffspringDistribution& dist,
                       std::uint64_t seed);

/// Keeps atoms with a2 < u < b2 and s < t <= t2. Times are not shifted.
AtomField restrict_field(const AtomField& field, double a2, double b2, double s, double t2);

/// Image under (u,t) -> (c u, t / c); bounds and horizon map accordingly.
AtomField scale_field(const AtomField& field, double c);

/// Translates every time by -shift and drops atoms that land at or below 0.
AtomField shift_time(const AtomField& field, double shift);

/// CSV with header `u,t,nu`, reals at 17 significant digits.
void write_atoms_csv(std::ostream& out, const AtomField& field);
std::string atoms_csv(const AtomField& field);

/// Reads the CSV written by write_atoms_csv; box bounds are supplied by the caller.
AtomField read_atoms_csv(std::istream& in, double a, double b, double horizon);

}  // namespace gwheaps
