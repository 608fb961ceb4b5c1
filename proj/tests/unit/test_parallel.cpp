#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "gwheaps/estimator.hpp"
#include "gwheaps/parallel.hpp"

using namespace gwheaps;

TEST_CASE("replica loop fills every slot once") {
    for (int jobs : {1, 2, 4, 0}) {
        std::vector<int> hits(257, 0);
        for_each_replica(hits.size(), jobs, [&](std::size_t i) { hits[i] += static_cast<int>(i) + 1; });
        bool ok = true;
        for (std::size_t i = 0; i < hits.size(); ++i) ok = ok && hits[i] == static_cast<int>(i) + 1;
        CHECK(ok);
    }
}

TEST_CASE("lowest failing index is rethrown") {
    auto body = [](std::size_t i) {
        if (i == 7 || i == 30) throw std::runtime_error("replica " + std::to_string(i));
    };
    for (int jobs : {1, 3}) {
        try {
            for_each_replica(50, jobs, body);
            FAIL("expected exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "replica 7");
        }
    }
}

TEST_CASE("reports do not depend on the job count") {
    const auto dist = OffspringDistribution::dirac(2);
    const auto serial = estimate_c_discrete(dist, 2000, 12, 3, 1);
    const auto threaded = estimate_c_discrete(dist, 2000, 12, 3, 4);
    CHECK(serial.ratio.point == threaded.ratio.point);
    CHECK(serial.slope.ci_high == threaded.slope.ci_high);

    const auto s1 = estimate_r_inf(dist, {2.0, 8.0}, 10, 5, true, 1.0, std::numbers::e, 1);
    const auto s4 = estimate_r_inf(dist, {2.0, 8.0}, 10, 5, true, 1.0, std::numbers::e, 4);
    CHECK(s1.per_replica == s4.per_replica);

    const auto t1 = stationarity_report(dist, 20.0, 0, 2, 10, 8, 1);
    const auto t3 = stationarity_report(dist, 20.0, 0, 2, 10, 8, 3);
    CHECK(t1.per_replica == t3.per_replica);
}
