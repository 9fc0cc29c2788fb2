#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rss/exact.hpp"
#include "rss/model.hpp"

namespace rss {

enum class Suite { Scalability, Analysis };

struct BenchmarkOptions {
    Suite suite = Suite::Scalability;
    int T_min = 4;
    int T_max = 8;
    std::vector<std::string> solvers = {"plain", "kconvex"};  ///< plain, kconvex, exact
    std::filesystem::path out_dir = "bench_out";
    int reps = 1;                 ///< timing repetitions, median reported
    int n = 10;                   ///< scalability instances per T
    std::uint64_t seed = 1;
    int limit = 0;                ///< keep the first `limit` instances per T (0 keeps all)
    bool oracle = true;           ///< gaps against the exact solver when T <= cap
    int cap = kDefaultEnumerationCap;
    int threads = 0;              ///< 0: RSS_THREADS or the hardware concurrency
    SolverOptions solver;
};

struct BenchmarkRow {
    std::string instance;
    std::string solver;
    double expected_cost = 0.0;
    std::optional<double> gap_pct;
    int reviews = 0;
    double time_ms = 0.0;
    std::int64_t states_evaluated = 0;
};

inline constexpr const char* kResultsHeader =
    "instance,solver,expected_cost,optimality_gap_pct,reviews,time_ms,states_evaluated";

/// Writes results.csv, times_<solver>.dat and summary.csv into out_dir.
/// Rows are written in label order as soon as every earlier instance is done.
/// Throws OutputError when a file cannot be written.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& options, std::ostream* progress = nullptr);

std::string format_row(const BenchmarkRow& row);

/// Worker count: requested, else hardware concurrency, capped by RSS_THREADS.
int worker_count(int requested);

}  // namespace rss
