#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "gwheaps/errors.hpp"
#include "gwheaps/poisson_field.hpp"
#include "gwheaps/stats.hpp"

using namespace gwheaps;

namespace {

const auto kBinary = OffspringDistribution::dirac(2);

double mean_count(double a, double b, double horizon, int seeds) {
    double total = 0.0;
    for (int s = 0; s < seeds; ++s) total += static_cast<double>(sample_field(a, b, horizon, kBinary, s).size());
    return total / seeds;
}

std::vector<std::size_t> order_by(const std::vector<Atom>& atoms, bool by_label) {
    std::vector<std::size_t> idx(atoms.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto x, auto y) {
        return by_label ? atoms[x].u < atoms[y].u : atoms[x].t < atoms[y].t;
    });
    return idx;
}

}  // namespace

TEST_CASE("sampled fields satisfy the field invariants") {
    const auto f = sample_field(-2.0, 3.0, 4.0, parse_spec("geom:0.4"), 17);
    CHECK(f.size() > 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Atom& at = f.atoms()[i];
        CHECK(at.u > -2.0);
        CHECK(at.u < 3.0);
        CHECK(at.t > 0.0);
        CHECK(at.t <= 4.0);
        CHECK(at.nu >= 1);
        if (i > 0) CHECK(f.atoms()[i - 1].t < at.t);
    }
    CHECK(f.seed() == 17);
}

TEST_CASE("sample_field is a pure function of its arguments") {
    CHECK(sample_field(0, 5, 5, kBinary, 3) == sample_field(0, 5, 5, kBinary, 3));
    CHECK_FALSE(sample_field(0, 5, 5, kBinary, 3) == sample_field(0, 5, 5, kBinary, 4));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(sample_field(1, 1, 1, kBinary, 0), DomainError);
    CHECK_THROWS_AS(sample_field(0, 1, 0, kBinary, 0), DomainError);
    CHECK_THROWS_AS(sample_field(0, 1, -1, kBinary, 0), DomainError);
    const auto f = sample_field(0, 1, 1, kBinary, 0);
    CHECK_THROWS_AS(restrict_field(f, -0.5, 1, 0, 1), DomainError);
    CHECK_THROWS_AS(restrict_field(f, 0, 1, 0, 2), DomainError);
    CHECK_THROWS_AS(scale_field(f, 0.0), DomainError);
    CHECK_THROWS_AS(scale_field(f, -1.0), DomainError);
}

TEST_CASE("validation rejects hand-crafted ties and out-of-box atoms") {
    CHECK_THROWS_AS(AtomField(0, 1, 1, {{0.5, 0.2, 1}, {0.5, 0.3, 1}}), ValidationError);
    CHECK_THROWS_AS(AtomField(0, 1, 1, {{0.4, 0.2, 1}, {0.5, 0.2, 1}}), ValidationError);
    CHECK_THROWS_AS(AtomField(0, 1, 1, {{0.4, 0.3, 1}, {0.5, 0.2, 1}}), ValidationError);
    CHECK_THROWS_AS(AtomField(0, 1, 1, {{1.0, 0.2, 1}}), ValidationError);
    CHECK_THROWS_AS(AtomField(0, 1, 1, {{0.5, 0.0, 1}}), ValidationError);
    CHECK_THROWS_AS(AtomField(0, 1, 1, {{0.5, 0.5, 0}}), ValidationError);
    CHECK_NOTHROW(AtomField(0, 1, 1, {{0.5, 1.0, 1}}));
}

TEST_CASE("vanishing area gives an empty field") {
    int empty = 0;
    for (int s = 0; s < 1000; ++s) empty += sample_field(0, 1, 1e-9, kBinary, s).empty() ? 1 : 0;
    CHECK(empty == 1000);
}

TEST_CASE("mean atom count equals the area") {
    CHECK(std::abs(mean_count(0, 1, 1, 10000) - 1.0) < 0.03);
    CHECK(std::abs(mean_count(0, 40, 15, 10000) - 600.0) < 8.0);
}

TEST_CASE("atom counts fit Poisson(area) by chi-squared") {
    for (double area_b : {1.0, 7.5}) {
        std::vector<std::uint64_t> counts;
        for (int s = 0; s < 10000; ++s) counts.push_back(sample_field(0, area_b, 1, kBinary, 1000 + s).size());
        const auto gof = stats::chi_square_poisson(counts, area_b);
        CHECK_MESSAGE(gof.p_value > 0.001, "area " << area_b << " chi2 " << gof.statistic << " dof " << gof.dof);
    }
}

TEST_CASE("positions and times look uniform") {
    const auto f = sample_field(0, 100, 100, kBinary, 5);
    std::vector<double> us, ts;
    for (const auto& at : f.atoms()) {
        us.push_back(at.u / 100);
        ts.push_back(at.t / 100);
    }
    CHECK(std::abs(stats::mean(us) - 0.5) < 0.01);
    CHECK(std::abs(stats::mean(ts) - 0.5) < 0.01);
}

TEST_CASE("restriction is a pure filter") {
    const auto f = sample_field(0, 4, 6, kBinary, 21);
    CHECK(restrict_field(f, 0, 4, 0, 6) == f);
    CHECK(restrict_field(f, 0, 4, 6, 6).empty());

    const auto r = restrict_field(f, 1, 2.5, 1.5, 5);
    std::vector<Atom> expected;
    for (const auto& at : f.atoms()) {
        if (at.u > 1 && at.u < 2.5 && at.t > 1.5 && at.t <= 5) expected.push_back(at);
    }
    CHECK(r.atoms() == expected);
    CHECK(r.a() == 1);
    CHECK(r.b() == 2.5);
    CHECK(r.horizon() == 5);
}

TEST_CASE("scaling maps coordinates and keeps both orders") {
    const auto f = sample_field(0, 3, 4, parse_spec("pmf:0.2,0.5,0.3"), 8);
    CHECK(scale_field(f, 1.0) == f);

    const double c = std::numbers::e;
    const auto g = scale_field(f, c);
    CHECK(g.a() == 0.0);
    CHECK(g.b() == c * 3);
    CHECK(g.horizon() == 4 / c);
    REQUIRE(g.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(g.atoms()[i].u == c * f.atoms()[i].u);
        CHECK(g.atoms()[i].t == f.atoms()[i].t / c);
        CHECK(g.atoms()[i].nu == f.atoms()[i].nu);
    }
    CHECK(order_by(g.atoms(), true) == order_by(f.atoms(), true));
    CHECK(order_by(g.atoms(), false) == order_by(f.atoms(), false));
}

TEST_CASE("scale then inverse scale recovers the field") {
    const auto f = sample_field(0, 3, 4, kBinary, 9);
    // Powers of two are exact in binary floating point.
    CHECK(scale_field(scale_field(f, 2.0), 0.5) == f);
    CHECK(scale_field(scale_field(f, 0.125), 8.0) == f);

    // A general factor round-trips to within two ulps per coordinate.
    const auto back = scale_field(scale_field(f, std::numbers::e), 1.0 / std::numbers::e);
    REQUIRE(back.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(std::abs(back.atoms()[i].u - f.atoms()[i].u) <= 4e-16 * f.atoms()[i].u);
        CHECK(std::abs(back.atoms()[i].t - f.atoms()[i].t) <= 4e-16 * f.atoms()[i].t);
        CHECK(back.atoms()[i].nu == f.atoms()[i].nu);
    }
}

TEST_CASE("restriction commutes with scaling") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto f = sample_field(0, 5, 5, kBinary, seed);
        for (double c : {std::numbers::e, 1 / std::numbers::e, 3.7}) {
            const auto lhs = restrict_field(scale_field(f, c), c * 1.0, c * 4.0, 0.5 / c, 3.0 / c);
            const auto rhs = scale_field(restrict_field(f, 1.0, 4.0, 0.5, 3.0), c);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("time shift drops atoms below the cut") {
    const AtomField f(0, 1, 5, {{0.3, 1.0, 1}, {0.6, 2.5, 2}, {0.1, 4.0, 1}});
    const auto g = shift_time(f, 2.0);
    REQUIRE(g.size() == 2);
    CHECK(g.atoms()[0] == Atom{0.6, 0.5, 2});
    CHECK(g.horizon() == 3.0);
}

TEST_CASE("atom CSV round-trips exactly") {
    const auto f = sample_field(-1, 2, 3, parse_spec("geom:0.3"), 77);
    const std::string text = atoms_csv(f);
    CHECK(text.rfind("u,t,nu\n", 0) == 0);
    std::istringstream in(text);
    const auto g = read_atoms_csv(in, f.a(), f.b(), f.horizon());
    CHECK(g.atoms() == f.atoms());

    std::istringstream bad("u,t,nu\n0.5;0.2;1\n");
    CHECK_THROWS_AS(read_atoms_csv(bad, 0, 1, 1), ParseError);
}
