#include <doctest.h>

#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rss/evaluate.hpp"
#include "rss/exact.hpp"
#include "rss/heuristic.hpp"

using namespace rss;

namespace {

Policy random_policy(std::mt19937_64& rng, int T) {
    Policy p;
    int t = 1;
    while (t <= T) {
        const int R = testing::uniform_int(rng, 1, T + 1 - t);
        const int s = testing::uniform_int(rng, -3, 8);
        p.reviews.push_back({t, R, s, s + testing::uniform_int(rng, 0, 8)});
        t += R;
    }
    return p;
}

}  // namespace

TEST_SUITE("evaluate") {

TEST_CASE("analytic cost matches path enumeration") {
    std::mt19937_64 rng(51);
    for (int rep = 0; rep < 30; ++rep) {
        const int T = testing::uniform_int(rng, 1, 4);
        auto tiny = testing::random_tiny(rng, T, 4);
        tiny.inst.I0 = testing::uniform_int(rng, -2, 4);
        Model model(tiny.inst, tiny.pmfs);
        const Policy p = random_policy(rng, T);
        CHECK(expected_cost(model, p) ==
              doctest::Approx(oracle::policy_cost(tiny.ref, tiny.inst.params, tiny.inst.I0, p)).epsilon(1e-10));
    }
}

TEST_CASE("malformed policies are rejected") {
    Instance inst;
    inst.T = 3;
    inst.params = {10, 1, 1, 5};
    inst.demand.assign(3, DemandSpec::poisson(2));
    CHECK_THROWS_AS(expected_cost(inst, Policy{}), std::invalid_argument);
    CHECK_THROWS_AS(expected_cost(inst, Policy{{{2, 2, 0, 5}}}), std::invalid_argument);
    CHECK_THROWS_AS(expected_cost(inst, Policy{{{1, 2, 0, 5}}}), std::invalid_argument);
    CHECK_THROWS_AS(expected_cost(inst, Policy{{{1, 3, 6, 5}}}), std::invalid_argument);
    CHECK_NOTHROW(expected_cost(inst, Policy{{{1, 3, 0, 5}}}));
}

TEST_CASE("simulation") {
    std::mt19937_64 rng(53);
    const Instance inst = testing::random_poisson(rng, 4, 5, 15);
    const SolveResult r = solve_kconvex(inst);
    const Policy p = extract_policy(r.tables, inst);

    SUBCASE("deterministic per seed and independent of threads") {
        SimulationOptions sim{.n_paths = 2000, .seed = 9};
        const EvalReport a = simulate(inst, p, sim);
        const EvalReport b = simulate(inst, p, sim);
        sim.threads = 3;
        const EvalReport c = simulate(inst, p, sim);
        CHECK(a.mc_mean == b.mc_mean);
        CHECK(a.mc_mean == c.mc_mean);
        CHECK(a.mc_halfwidth_95 == c.mc_halfwidth_95);
        sim.seed = 10;
        CHECK(simulate(inst, p, sim).mc_mean != a.mc_mean);
    }
    SUBCASE("estimate brackets the analytic cost") {
        const EvalReport e = simulate(inst, p, {.n_paths = 50000, .seed = 2});
        CHECK(e.expected_cost == doctest::Approx(r.expected_cost).epsilon(1e-10));
        CHECK(std::abs(e.mc_mean - e.expected_cost) < 4.0 * e.mc_halfwidth_95);
    }
    SUBCASE("continuous normal sampling stays close") {
        Instance n = inst;
        for (auto& d : n.demand) d = DemandSpec::normal(d.mean + 20, 0.2);
        const Policy q = extract_policy(solve_kconvex(n).tables, n);
        const EvalReport e = simulate(n, q, {.n_paths = 20000, .seed = 3, .continuous_normal = true});
        CHECK(std::abs(e.mc_mean - e.expected_cost) < 0.02 * e.expected_cost);
    }
    SUBCASE("zero paths rejected") {
        CHECK_THROWS_AS(simulate(inst, p, {.n_paths = 0}), std::invalid_argument);
    }
}

TEST_CASE("deterministic demand has zero half-width") {
    Instance inst;
    inst.T = 3;
    inst.params = {30, 5, 1, 9};
    inst.demand.assign(3, DemandSpec::normal(4, 0));
    const Policy p = extract_policy(solve_kconvex(inst).tables, inst);
    const EvalReport e = simulate(inst, p, {.n_paths = 10, .seed = 1});
    CHECK(e.mc_halfwidth_95 == 0.0);
    CHECK(e.mc_mean == doctest::Approx(e.expected_cost));
}

TEST_CASE("optimality gap") {
    CHECK(optimality_gap(100.0, 100.0) == 0.0);
    CHECK(optimality_gap(102.9, 100.0) == doctest::Approx(0.029));
    CHECK(optimality_gap(100.0 - 1e-7, 100.0) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK_THROWS_AS(optimality_gap(99.0, 100.0), OracleViolation);
    CHECK_THROWS_AS(optimality_gap(1.0, 0.0), std::invalid_argument);
}

}
