#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "rss/heuristic.hpp"
#include "rss/io.hpp"

using namespace rss;
using nlohmann::json;

namespace {

json sample() {
    return json::parse(R"({"T": 2, "K": 100, "W": 10, "h": 1, "b": 9, "I0": 3, "beta": 1,
        "demand": [{"kind": "poisson", "mean": 4}, {"kind": "normal", "mean": 6, "cv": 0.25}],
        "label": "two"})");
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("instance documents parse") {
    const Instance inst = instance_from_json(sample());
    CHECK(inst.T == 2);
    CHECK(inst.params == CostParams{100, 10, 1, 9});
    CHECK(inst.I0 == 3);
    CHECK(inst.demand[0] == DemandSpec::poisson(4));
    CHECK(inst.demand[1] == DemandSpec::normal(6, 0.25));
    CHECK(inst.label == "two");
    CHECK(instance_from_json(json::parse(to_json(inst).dump())) == inst);

    json no_beta = sample();
    no_beta.erase("beta");
    CHECK(instance_from_json(no_beta).beta == 1.0);
}

TEST_CASE("bad instance documents are rejected") {
    auto with = [](auto edit) {
        json doc = sample();
        edit(doc);
        return doc;
    };
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d["extra"] = 1; })), InputError);
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d.erase("K"); })), InputError);
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d["T"] = 3; })), InputError);
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d["T"] = 2.5; })), InputError);
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d["b"] = "high"; })), InputError);
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d["demand"][0]["kind"] = "gamma"; })), InputError);
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d["demand"][0]["shape"] = 2; })), InputError);
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d["demand"][0]["mean"] = -1; })), InputError);
    CHECK_THROWS_AS(instance_from_json(with([](json& d) { d["beta"] = 2; })), InputError);
    CHECK_THROWS_AS(instance_from_json(json::array()), InputError);
}

TEST_CASE("policy documents round trip") {
    const Policy p{{{1, 2, 5, 30}, {3, 1, -2, 12}}};
    const auto doc = policy_from_json(json::parse(to_json(p, 123.5).dump()));
    CHECK(doc.policy == p);
    CHECK(doc.expected_cost.value() == 123.5);
    CHECK_THROWS_AS(policy_from_json(json::parse(R"({"reviews": [{"t": 1, "R": 1, "s": 0}]})")), InputError);
    CHECK_THROWS_AS(policy_from_json(json::parse(R"({"reviews": [], "cost": 1})")), InputError);
}

TEST_CASE("file round trip solves identically") {
    std::mt19937_64 rng(61);
    Instance inst = testing::random_poisson(rng, 4, 5, 15);
    inst.demand[2] = DemandSpec::normal(11.3, 0.3);
    inst.label = "roundtrip";
    const auto path = std::filesystem::temp_directory_path() / "rss_io_roundtrip.json";
    write_instance(path, inst);
    const Instance back = read_instance(path);
    std::filesystem::remove(path);
    CHECK(back == inst);
    const SolveResult a = solve_kconvex(inst);
    const SolveResult b = solve_kconvex(back);
    CHECK(a.expected_cost == b.expected_cost);
    CHECK(extract_policy(a.tables, inst) == extract_policy(b.tables, back));
}

TEST_CASE("unreadable files") {
    CHECK_THROWS_AS(read_instance("/nonexistent/instance.json"), InputError);
    const auto path = std::filesystem::temp_directory_path() / "rss_io_garbage.json";
    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS(read_instance(path), InputError);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(write_instance("/nonexistent/dir/x.json", Instance{}), OutputError);
}

}
