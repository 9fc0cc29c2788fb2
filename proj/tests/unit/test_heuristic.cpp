#include <doctest.h>

#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rss/evaluate.hpp"
#include "rss/heuristic.hpp"

using namespace rss;

namespace {

Instance deterministic_pair() {
    Instance inst;
    inst.T = 2;
    inst.params = {100, 10, 1, 1000};
    inst.demand = {DemandSpec::normal(10, 0), DemandSpec::normal(10, 0)};
    return inst;
}

}  // namespace

TEST_SUITE("heuristic") {

TEST_CASE("single period with no demand costs one review") {
    Instance inst;
    inst.T = 1;
    inst.params = {50, 7, 1, 5};
    inst.demand = {DemandSpec::poisson(0)};
    for (bool plain : {true, false}) {
        const SolveResult r = plain ? solve_plain(inst) : solve_kconvex(inst);
        CHECK(r.expected_cost == 7.0);
        const Policy p = extract_policy(r.tables, inst);
        REQUIRE(p.review_count() == 1);
        CHECK(p.reviews[0].R == 1);
    }
}

TEST_CASE("deterministic demand covers both periods with one order") {
    const Instance inst = deterministic_pair();
    const SolveResult r = solve_kconvex(inst);
    CHECK(r.expected_cost == doctest::Approx(120.0));
    const Policy p = extract_policy(r.tables, inst);
    REQUIRE(p.review_count() == 1);
    CHECK(p.reviews[0] == Review{1, 2, p.reviews[0].s, 20});
    CHECK(p.reviews[0].s > 0);
    CHECK(p.reviews[0].s <= 20);
}

TEST_CASE("kconvex and plain agree with the literal recursion") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 25; ++rep) {
        const int T = testing::uniform_int(rng, 1, 4);
        auto tiny = testing::random_tiny(rng, T, 4);
        tiny.inst.I0 = testing::uniform_int(rng, -3, 6);
        Model km(tiny.inst, tiny.pmfs);
        Model pm(tiny.inst, tiny.pmfs);
        const SolveResult k = solve_kconvex(km);
        const SolveResult p = solve_plain(pm);
        const auto ref = oracle::heuristic(tiny.ref, tiny.inst.params, tiny.inst.I0, km.grid().min_inv, km.grid().max_inv);
        CHECK(k.expected_cost == doctest::Approx(ref.cost).epsilon(1e-10));
        CHECK(p.expected_cost == doctest::Approx(ref.cost).epsilon(1e-10));
        for (int t = 1; t <= T; ++t) {
            const auto& minima = ref.minima[static_cast<std::size_t>(t - 1)];
            const auto& got = k.tables.period(t).candidate_minima;
            REQUIRE(got.size() == minima.size());
            for (std::size_t r = 0; r < minima.size(); ++r) CHECK(got[r] == doctest::Approx(minima[r]).epsilon(1e-10));
        }
        CHECK(extract_policy(k.tables, tiny.inst) == extract_policy(p.tables, tiny.inst));
    }
}

TEST_CASE("reported cost equals the policy's evaluated cost") {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 10; ++rep) {
        const Instance inst = testing::random_poisson(rng, testing::uniform_int(rng, 2, 5), 5, 20);
        Model model(inst);
        const SolveResult r = solve_kconvex(model);
        const Policy p = extract_policy(r.tables, inst);
        CHECK_NOTHROW(validate(p, inst.T));
        CHECK(expected_cost(model, p) == doctest::Approx(r.expected_cost).epsilon(1e-10));
    }
}

TEST_CASE("kconvex evaluates fewer states than plain") {
    std::mt19937_64 rng(8);
    const Instance inst = testing::random_poisson(rng, 4, 10, 20);
    const SolveResult k = solve_kconvex(inst);
    const SolveResult p = solve_plain(inst);
    CHECK(k.stats.states_evaluated < p.stats.states_evaluated);
    CHECK(k.stats.value_evaluations < p.stats.value_evaluations);
}

TEST_CASE("recorded cycle tables cover every candidate") {
    std::mt19937_64 rng(12);
    const Instance inst = testing::random_poisson(rng, 3, 5, 10);
    Model model(inst);
    const SolveResult r = solve_kconvex(model, {.record_cycle_tables = true});
    CHECK(r.cycle_tables.size() == 6);
    for (const auto& c : r.cycle_tables) CHECK(static_cast<int>(c.no_order.size()) == model.grid().size());
}

TEST_CASE("lost sales") {
    std::mt19937_64 rng(31);
    SUBCASE("full backlog matches the plain solve") {
        const Instance inst = testing::random_poisson(rng, 3, 5, 10);
        CHECK(solve_lost_sales(inst).expected_cost == solve_plain(inst).expected_cost);
    }
    SUBCASE("partial backlog is consistent with the evaluator") {
        for (double beta : {0.0, 0.3, 0.7}) {
            auto tiny = testing::random_tiny(rng, 3, 4);
            tiny.inst.beta = beta;
            Model model(tiny.inst, tiny.pmfs);
            const SolveResult r = solve_lost_sales(model);
            const Policy p = extract_policy(r.tables, tiny.inst);
            CHECK(expected_cost(model, p) == doctest::Approx(r.expected_cost).epsilon(1e-10));
            CHECK(oracle::policy_cost(tiny.ref, tiny.inst.params, tiny.inst.I0, p, beta) ==
                  doctest::Approx(r.expected_cost).epsilon(1e-10));
        }
    }
    SUBCASE("backlog solvers reject beta < 1") {
        Instance inst = testing::random_poisson(rng, 2, 5, 10);
        inst.beta = 0.5;
        CHECK_THROWS_AS(solve_kconvex(inst), std::invalid_argument);
        CHECK_THROWS_AS(solve_plain(inst), std::invalid_argument);
        inst.beta = 1.5;
        CHECK_THROWS_AS(solve_lost_sales(inst), std::invalid_argument);
    }
}

}
