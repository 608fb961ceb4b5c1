#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "gwheaps/errors.hpp"
#include "gwheaps/stats.hpp"

using namespace gwheaps;

TEST_CASE("moments and intervals") {
    const std::vector<double> xs = {1, 2, 3, 4};
    CHECK(stats::mean(xs) == 2.5);
    CHECK(stats::sample_variance(xs) == doctest::Approx(5.0 / 3.0));
    const auto iv = stats::mean_interval(xs);
    CHECK(iv.std_error == doctest::Approx(std::sqrt(5.0 / 12.0)));
    CHECK(iv.low < iv.mean);
    CHECK(iv.high > iv.mean);
    CHECK(iv.high - iv.mean == doctest::Approx(stats::kZ95 * iv.std_error));
    CHECK_THROWS_AS(stats::sample_variance(std::vector<double>{1.0}), DomainError);
    CHECK_THROWS_AS(stats::mean(std::vector<double>{}), DomainError);
}

TEST_CASE("correlation") {
    const std::vector<double> xs = {1, 2, 3, 4, 5};
    const std::vector<double> ys = {2, 4, 6, 8, 10};
    const std::vector<double> zs = {5, 4, 3, 2, 1};
    const std::vector<double> flat = {3, 3, 3, 3, 3};
    CHECK(stats::correlation(xs, ys) == doctest::Approx(1.0));
    CHECK(stats::correlation(xs, zs) == doctest::Approx(-1.0));
    CHECK(std::isnan(stats::correlation(xs, flat)));
}

TEST_CASE("two-sample KS") {
    CHECK(stats::ks_statistic({1, 2, 3}, {1, 2, 3}) == 0.0);
    CHECK(stats::ks_statistic({1, 2, 3}, {4, 5, 6}) == 1.0);
    CHECK(stats::ks_statistic({1, 1, 2, 2}, {1, 2, 2, 2}) == doctest::Approx(0.25));
    // c(0.001) = sqrt(-ln(0.0005)/2) = 1.94947...
    CHECK(stats::ks_critical(0.001, 1000, 1000) == doctest::Approx(1.9494746 * std::sqrt(2.0 / 1000)).epsilon(1e-6));
}

TEST_CASE("chi-squared Poisson fit") {
    std::mt19937_64 gen(3);
    std::poisson_distribution<std::uint64_t> law(4.0);
    std::vector<std::uint64_t> good, shifted;
    for (int k = 0; k < 5000; ++k) {
        good.push_back(law(gen));
        shifted.push_back(law(gen) + 1);
    }
    const auto fit = stats::chi_square_poisson(good, 4.0);
    CHECK(fit.dof >= 5);
    CHECK(fit.p_value > 0.001);
    CHECK(stats::chi_square_poisson(shifted, 4.0).p_value < 1e-6);
}
