#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rss/demand.hpp"

using namespace rss;

TEST_SUITE("demand") {

TEST_CASE("poisson pmf matches the product recursion") {
    for (double mean : {0.5, 3.0, 12.5, 40.0, 70.0}) {
        const DemandPmf d = discretize(DemandSpec::poisson(mean), 1e-6);
        const oracle::Pmf ref = oracle::poisson(mean, 1e-6);
        CHECK(d.offset() == 0);
        CHECK(d.max_value() == ref.rbegin()->first);
        for (const auto& [k, p] : ref) CHECK(d.at(k) == doctest::Approx(p).epsilon(1e-10));
        CHECK(d.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(d.mean() == doctest::Approx(mean).epsilon(1e-4));
    }
}

TEST_CASE("zero mean is a point mass at zero") {
    const DemandPmf p = discretize(DemandSpec::poisson(0.0));
    CHECK(p.size() == 1);
    CHECK(p.at(0) == 1.0);
    const DemandPmf n = discretize(DemandSpec::normal(0.0, 0.3));
    CHECK(n.size() == 1);
    CHECK(n.at(0) == 1.0);
}

TEST_CASE("normal with zero cv rounds the mean") {
    const DemandPmf d = discretize(DemandSpec::normal(12.6, 0.0));
    CHECK(d.size() == 1);
    CHECK(d.offset() == 13);
}

TEST_CASE("normal discretisation keeps the first two moments") {
    for (double cv : {0.1, 0.2, 0.3}) {
        const DemandPmf d = discretize(DemandSpec::normal(50.0, cv));
        CHECK(d.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(d.mean() == doctest::Approx(50.0).epsilon(1e-3));
        // the unit-width bins add 1/12 to the variance
        CHECK(d.variance() == doctest::Approx(cv * cv * 2500.0 + 1.0 / 12.0).epsilon(2e-3));
    }
}

TEST_CASE("normal mass below zero is folded into zero") {
    const DemandPmf d = discretize(DemandSpec::normal(2.0, 1.0));
    const double phi = 0.5 * std::erfc(-(0.5 - 2.0) / 2.0 / std::sqrt(2.0));
    CHECK(d.at(0) == doctest::Approx(phi).epsilon(1e-5));
    CHECK(d.min_value() == 0);
}

TEST_CASE("invalid specifications are rejected") {
    CHECK_THROWS_AS(discretize(DemandSpec::poisson(-1.0)), std::invalid_argument);
    CHECK_THROWS_AS(discretize(DemandSpec::normal(10.0, -0.1)), std::invalid_argument);
    CHECK_THROWS_AS(discretize(DemandSpec::poisson(5.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(discretize(DemandSpec::poisson(5.0), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(DemandPmf(0, {0.5, -0.1}), std::invalid_argument);
    CHECK_THROWS_AS(DemandPmf(-1, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DemandPmf(0, {}), std::invalid_argument);
}

TEST_CASE("convolution matches the double sum") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        auto tiny = testing::random_tiny(rng, 2);
        const DemandPmf c = convolve(tiny.pmfs[0], tiny.pmfs[1]);
        const oracle::Pmf ref = oracle::convolve(tiny.ref[0], tiny.ref[1]);
        CHECK(c.min_value() == ref.begin()->first);
        CHECK(c.max_value() == ref.rbegin()->first);
        for (const auto& [k, p] : ref) CHECK(c.at(k) == doctest::Approx(p).epsilon(1e-14));
    }
}

TEST_CASE("cumulative demand covers every (t, j)") {
    std::mt19937_64 rng(11);
    auto tiny = testing::random_tiny(rng, 5);
    const CumulativeDemand cd(tiny.pmfs);
    CHECK(cd.horizon() == 5);
    for (int t = 1; t <= 5; ++t)
        for (int j = t + 1; j <= 6; ++j) {
            const oracle::Pmf ref = oracle::cumulative(tiny.ref, t, j);
            const DemandPmf& d = cd.cumulative(t, j);
            CHECK(d.min_value() == ref.begin()->first);
            CHECK(d.max_value() == ref.rbegin()->first);
            for (const auto& [k, p] : ref) CHECK(d.at(k) == doctest::Approx(p).epsilon(1e-12));
        }
    CHECK(cd.max_total() == oracle::cumulative(tiny.ref, 1, 6).rbegin()->first);
    CHECK_THROWS_AS(cd.cumulative(3, 3), std::out_of_range);
    CHECK_THROWS_AS(cd.cumulative(0, 2), std::out_of_range);
    CHECK_THROWS_AS(cd.cumulative(2, 7), std::out_of_range);
    CHECK_THROWS_AS(cd.period(6), std::out_of_range);
}

TEST_CASE("quantile and total variation") {
    const DemandPmf d(2, {0.25, 0.25, 0.5});
    CHECK(d.quantile(0.2) == 2);
    CHECK(d.quantile(0.5) == 3);
    CHECK(d.quantile(0.51) == 4);
    CHECK(d.quantile(1.0) == 4);
    CHECK(total_variation(d, d) == 0.0);
    CHECK(total_variation(d, DemandPmf::point_mass(0)) == doctest::Approx(1.0));
}

}
