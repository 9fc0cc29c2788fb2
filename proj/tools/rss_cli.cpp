// rss: solve, evaluate and benchmark (R, s, S) lot-sizing instances.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rss/benchmark.hpp"
#include "rss/evaluate.hpp"
#include "rss/exact.hpp"
#include "rss/heuristic.hpp"
#include "rss/io.hpp"
#include "rss/testbed.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kCapability = 3, kOutput = 4 };

struct SolveArgs {
    std::string instance;
    std::string solver = "kconvex";
    double grid_eps = rss::kDefaultGridEps;
    double tail_eps = rss::kDefaultTailEps;
    std::uint64_t seed = 1;
    int cap = rss::kDefaultEnumerationCap;
};

struct EvalArgs {
    std::string instance;
    std::string policy;
    std::int64_t simulate = -1;
    std::uint64_t seed = 1;
    bool continuous = false;
    int threads = 1;
    double grid_eps = rss::kDefaultGridEps;
    double tail_eps = rss::kDefaultTailEps;
};

struct GenArgs {
    std::string suite = "scalability";
    int T = 10;
    int n = 10;
    std::uint64_t seed = 1;
    std::string out = ".";
};

int cmd_solve(const SolveArgs& a) {
    const rss::Instance inst = rss::read_instance(a.instance);
    const rss::SolverOptions opts{a.grid_eps, a.tail_eps};
    rss::Policy policy;
    double cost = 0.0;
    if (a.solver == "exact") {
        if (inst.beta < 1.0) throw rss::CapabilityError("exact solver supports full backlogging only");
        auto r = rss::enumerate_optimal(inst, opts, a.cap);
        policy = std::move(r.policy);
        cost = r.expected_cost;
    } else {
        rss::SolveResult r;
        if (inst.beta < 1.0) {
            if (a.solver == "kconvex")
                throw rss::CapabilityError("kconvex solver supports full backlogging only; use --solver plain");
            r = rss::solve_lost_sales(inst, opts);
        } else {
            r = a.solver == "plain" ? rss::solve_plain(inst, opts) : rss::solve_kconvex(inst, opts);
        }
        policy = rss::extract_policy(r.tables, inst);
        cost = r.expected_cost;
    }
    std::cout << rss::to_json(policy, cost).dump(2) << '\n';
    return kOk;
}

int cmd_evaluate(const EvalArgs& a) {
    const rss::Instance inst = rss::read_instance(a.instance);
    const rss::PolicyDocument doc = rss::read_policy(a.policy);
    const rss::SolverOptions opts{a.grid_eps, a.tail_eps};
    nlohmann::ordered_json out;
    if (a.simulate >= 0) {
        rss::SimulationOptions sim;
        sim.n_paths = a.simulate;
        sim.seed = a.seed;
        sim.continuous_normal = a.continuous;
        sim.threads = a.threads;
        const auto report = rss::simulate(inst, doc.policy, sim, opts);
        out = {{"expected_cost", report.expected_cost},
               {"mc_mean", report.mc_mean},
               {"mc_halfwidth_95", report.mc_halfwidth_95},
               {"n_paths", report.n_paths},
               {"seed", report.seed}};
    } else {
        out = {{"expected_cost", rss::expected_cost(inst, doc.policy, opts)}};
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_benchmark(const rss::BenchmarkOptions& opts) {
    const auto rows = rss::run_benchmark(opts, &std::cerr);
    std::cerr << rows.size() << " rows written to " << (opts.out_dir / "results.csv").string() << '\n';
    return kOk;
}

int cmd_gen(const GenArgs& a) {
    std::vector<rss::Instance> instances;
    if (a.suite == "scalability") {
        instances = rss::gen_scalability(a.T, a.n, a.seed);
    } else {
        for (auto& x : rss::gen_analysis(a.T)) instances.push_back(std::move(x.instance));
    }
    std::error_code ec;
    std::filesystem::create_directories(a.out, ec);
    if (ec) throw rss::OutputError("cannot create " + a.out + ": " + ec.message());
    for (const auto& inst : instances) rss::write_instance(std::filesystem::path(a.out) / (inst.label + ".json"), inst);
    std::cerr << instances.size() << " instances written to " << a.out << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic lot sizing under (R, s, S) policies"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Compute a policy and print it as JSON");
    s->add_option("instance", solve.instance, "Instance JSON file")->required();
    s->add_option("--solver", solve.solver, "plain, kconvex or exact")
        ->check(CLI::IsMember({"plain", "kconvex", "exact"}));
    s->add_option("--grid-eps", solve.grid_eps, "Tail mass left outside the inventory grid");
    s->add_option("--tail-eps", solve.tail_eps, "Tail mass dropped when discretising demand");
    s->add_option("--seed", solve.seed, "Accepted for symmetry with evaluate; solves are deterministic");
    s->add_option("--cap", solve.cap, "Largest horizon the exact solver accepts");

    EvalArgs eval;
    auto* e = app.add_subcommand("evaluate", "Expected cost of a policy, optionally by simulation");
    e->add_option("instance", eval.instance, "Instance JSON file")->required();
    e->add_option("policy", eval.policy, "Policy JSON file")->required();
    e->add_option("--simulate", eval.simulate, "Number of Monte-Carlo paths");
    e->add_option("--seed", eval.seed, "Simulation seed");
    e->add_flag("--continuous", eval.continuous, "Sample Normal demand from the continuous distribution");
    e->add_option("--threads", eval.threads, "Simulation threads");
    e->add_option("--grid-eps", eval.grid_eps);
    e->add_option("--tail-eps", eval.tail_eps);

    rss::BenchmarkOptions bench;
    std::string suite = "scalability";
    std::string solvers = "plain,kconvex";
    bool no_oracle = false;
    std::string out_dir = bench.out_dir.string();
    auto* b = app.add_subcommand("benchmark", "Run a test-bed campaign and write CSV reports");
    b->add_option("suite", suite, "scalability or analysis")->check(CLI::IsMember({"scalability", "analysis"}));
    b->add_option("--T-min", bench.T_min);
    b->add_option("--T-max", bench.T_max);
    b->add_option("--solvers", solvers, "Comma-separated list of plain, kconvex, exact");
    b->add_option("--out", out_dir, "Output directory");
    b->add_option("--reps", bench.reps, "Timing repetitions (median reported)");
    b->add_option("--n", bench.n, "Scalability instances per horizon");
    b->add_option("--seed", bench.seed);
    b->add_option("--limit", bench.limit, "Instances per horizon (0 for all)");
    b->add_flag("--no-oracle", no_oracle, "Skip the exact solver used for optimality gaps");
    b->add_option("--cap", bench.cap);
    b->add_option("--threads", bench.threads, "Worker threads (capped by RSS_THREADS)");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write generated instances as JSON files");
    g->add_option("suite", gen.suite, "scalability or analysis")->check(CLI::IsMember({"scalability", "analysis"}));
    g->add_option("--T", gen.T);
    g->add_option("--n", gen.n);
    g->add_option("--seed", gen.seed);
    g->add_option("--out", gen.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*s) return cmd_solve(solve);
        if (*e) return cmd_evaluate(eval);
        if (*b) {
            bench.suite = suite == "analysis" ? rss::Suite::Analysis : rss::Suite::Scalability;
            bench.oracle = !no_oracle;
            bench.out_dir = out_dir;
            bench.solvers.clear();
            std::stringstream list(solvers);
            for (std::string item; std::getline(list, item, ',');)
                if (!item.empty()) bench.solvers.push_back(item);
            return cmd_benchmark(bench);
        }
        return cmd_gen(gen);
    } catch (const rss::CapabilityError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kCapability;
    } catch (const rss::OutputError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kOutput;
    } catch (const rss::InputError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInput;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kFailure;
    }
}
