#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "gwheaps/errors.hpp"
#include "gwheaps/io.hpp"

using namespace gwheaps;

TEST_CASE("forest JSON nests children") {
    const std::vector<SequenceItem> fig = {{.1, 1}, {.7, 2}, {.2, 2}, {.4, 3}, {.8, 1}, {.3, 1}};
    const auto j = io::forest_to_json(run(fig).forest);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["label"] == .1);
    CHECK(j[0]["children"][0]["label"] == .7);
    CHECK(j[0]["children"][0]["children"][0]["label"] == .8);
    CHECK(j[1]["label"] == .2);
    CHECK(j[1]["capacity"] == 2);
    CHECK(j[1]["children"].size() == 2);
    CHECK(j[1]["children"][1]["label"] == .3);
}

TEST_CASE("deep chains serialize without recursion") {
    std::vector<SequenceItem> chain;
    for (int i = 0; i < 200000; ++i) chain.push_back({i * 1e-6, 1});
    const auto j = io::forest_to_json(run(chain).forest);
    CHECK(j.size() == 1);
}

TEST_CASE("trace and sequence CSV") {
    const std::vector<SequenceItem> fig = {{.1, 1}, {.7, 2}, {.2, 2}};
    std::ostringstream trace;
    io::write_trace_csv(trace, run(fig).trace);
    CHECK(trace.str() == "n,R\n1,1\n2,1\n3,2\n");

    const auto seq = generate_sequence(parse_spec("geom:0.3"), 100, 4);
    std::ostringstream out;
    io::write_sequence_csv(out, seq);
    std::istringstream in(out.str());
    CHECK(io::read_sequence_csv(in) == seq);

    std::istringstream bad("label,capacity\n0.5\n");
    CHECK_THROWS_AS(io::read_sequence_csv(bad), ParseError);
    std::istringstream headless("0.5,1\n");
    CHECK_THROWS_AS(io::read_sequence_csv(headless), ParseError);
}

TEST_CASE("graphical representation JSON round-trips losslessly") {
    const auto field = sample_field(0, 7, 5, parse_spec("pmf:0.3,0.3,0.4"), 12);
    const auto rep = simulate(field);
    const auto j = io::rep_to_json(rep);
    CHECK(j["strip"][1] == 7.0);
    CHECK(j["h_lines"].size() == rep.h_lines.size());
    const auto back = io::rep_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == rep);
    CHECK_THROWS_AS(io::rep_from_json(nlohmann::json::parse(R"({"strip":[0]})")), ParseError);
}

TEST_CASE("reports embed provenance") {
    const auto dist = OffspringDistribution::dirac(2);
    const auto d = io::to_json(estimate_c_discrete(dist, 1000, 3, 17));
    CHECK(d["provenance"]["dist"] == "dirac:2");
    CHECK(d["provenance"]["seed"] == 17);
    CHECK(d["provenance"]["replicas"] == 3);
    CHECK(d["provenance"]["version"] == kVersion);
    CHECK(d["ratio"]["method"] == "ratio-at-n");
    CHECK(d["warning"].is_null());

    const auto strip = estimate_r_inf(dist, {2.0, 4.0}, 3, 1);
    const auto s = io::to_json(strip);
    CHECK(s["estimates"][0]["width"] == 2.0);
    CHECK(s["per_replica"].size() == 3);
    const auto csv = io::replicas_csv(strip);
    CHECK(csv.rfind("replica,W=2,W=4\n", 0) == 0);

    CHECK(io::to_json(stationarity_report(dist, 10, 0, 1, 3, 1)).contains("provenance"));
    CHECK(io::to_json(decorrelation_report(dist, 10, 0, 1, 3, 1)).contains("provenance"));
    CHECK(io::to_json(scaling_check(dist, 0, 1, 1, 2.0, 1, 10)).contains("provenance"));
    CHECK(io::to_json(trajectory(dist, 100, 2, 1)).contains("provenance"));
    CHECK(io::to_csv(estimate_c_discrete(dist, 1000, 3, 17)).rfind("method,n_or_width,point", 0) == 0);
}
