#include "rss/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "rss/evaluate.hpp"
#include "rss/heuristic.hpp"
#include "rss/io.hpp"
#include "rss/testbed.hpp"

namespace rss {

namespace {

struct Job {
    Instance instance;
    std::vector<std::pair<std::string, std::string>> factors;
};

struct Outcome {
    double cost = 0.0;
    Policy policy;
    std::int64_t states = 0;
};

Outcome run_solver(const std::string& solver, const Instance& inst, const BenchmarkOptions& opt) {
    Model model(inst, opt.solver);
    if (solver == "exact") {
        auto e = enumerate_optimal(model, opt.cap);
        return {e.expected_cost, std::move(e.policy), e.states_evaluated};
    }
    auto r = solver == "plain" ? solve_plain(model) : solve_kconvex(model);
    return {r.expected_cost, extract_policy(r.tables, inst), r.stats.states_evaluated};
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<Job> make_jobs(const BenchmarkOptions& opt) {
    std::vector<Job> jobs;
    for (int T = opt.T_min; T <= opt.T_max; ++T) {
        std::vector<Job> batch;
        if (opt.suite == Suite::Scalability) {
            for (auto& inst : gen_scalability(T, opt.n, opt.seed + static_cast<std::uint64_t>(T)))
                batch.push_back({std::move(inst), {{"T", std::to_string(T)}}});
        } else {
            for (auto& a : gen_analysis(T)) {
                const auto& f = a.factors;
                batch.push_back({std::move(a.instance),
                                 {{"T", std::to_string(T)},
                                  {"K", std::to_string(static_cast<int>(f.K))},
                                  {"W", std::to_string(static_cast<int>(f.W))},
                                  {"demand", f.demand_level()},
                                  {"pattern", std::string(to_string(f.pattern))}}});
            }
        }
        if (opt.limit > 0 && batch.size() > static_cast<std::size_t>(opt.limit))
            batch.resize(static_cast<std::size_t>(opt.limit));
        for (auto& j : batch) jobs.push_back(std::move(j));
    }
    return jobs;
}

std::vector<BenchmarkRow> run_job(const Job& job, const BenchmarkOptions& opt) {
    const Instance& inst = job.instance;
    const bool exact_ok = inst.T <= opt.cap;
    std::vector<BenchmarkRow> rows;
    std::optional<double> optimum;
    for (const auto& solver : opt.solvers) {
        if (solver == "exact" && !exact_ok) continue;
        std::vector<double> times;
        Outcome out;
        for (int rep = 0; rep < std::max(1, opt.reps); ++rep) {
            const auto start = std::chrono::steady_clock::now();
            out = run_solver(solver, inst, opt);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        if (solver == "exact") optimum = out.cost;
        rows.push_back({inst.label, solver, out.cost, std::nullopt, static_cast<int>(out.policy.review_count()),
                        median(times), out.states});
    }
    if (opt.oracle && exact_ok) {
        if (!optimum) optimum = run_solver("exact", inst, opt).cost;
        for (auto& row : rows) row.gap_pct = 100.0 * optimality_gap(row.expected_cost, *optimum);
    }
    return rows;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw OutputError("cannot write " + path.string());
    return out;
}

void check(const std::ofstream& out, const std::filesystem::path& path) {
    if (!out) throw OutputError("write failed: " + path.string());
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

void write_times(const BenchmarkOptions& opt, const std::vector<Job>& jobs, const std::vector<BenchmarkRow>& rows) {
    std::map<std::string, int> horizon;
    for (const auto& j : jobs) horizon[j.instance.label] = j.instance.T;
    for (const auto& solver : opt.solvers) {
        const auto path = opt.out_dir / ("times_" + solver + ".dat");
        auto out = open_output(path);
        out << "# T median_seconds\n";
        std::map<int, std::vector<double>> by_T;
        for (const auto& r : rows)
            if (r.solver == solver) by_T[horizon[r.instance]].push_back(r.time_ms / 1000.0);
        for (const auto& [T, secs] : by_T) out << T << ' ' << fmt("%.6f", median(secs)) << '\n';
        check(out, path);
    }
}

void write_summary(const BenchmarkOptions& opt, const std::vector<Job>& jobs, const std::vector<BenchmarkRow>& rows) {
    const auto path = opt.out_dir / "summary.csv";
    auto out = open_output(path);
    out << "solver,factor,level,instances,mean_gap_pct,pct_non_optimal,mean_time_ms,mean_reviews\n";

    std::map<std::string, const Job*> by_label;
    for (const auto& j : jobs) by_label[j.instance.label] = &j;

    // factor names and levels in generation order
    std::vector<std::pair<std::string, std::vector<std::string>>> factors;
    for (const auto& j : jobs)
        for (const auto& [name, level] : j.factors) {
            auto it = std::find_if(factors.begin(), factors.end(), [&](const auto& f) { return f.first == name; });
            if (it == factors.end()) it = factors.insert(factors.end(), {name, {}});
            if (std::find(it->second.begin(), it->second.end(), level) == it->second.end())
                it->second.push_back(level);
        }

    auto emit = [&](const std::string& solver, const std::string& factor, const std::string& level, auto&& keep) {
        int n = 0, with_gap = 0, non_optimal = 0;
        double gap = 0.0, time = 0.0, reviews = 0.0;
        for (const auto& r : rows) {
            if (r.solver != solver || !keep(*by_label[r.instance])) continue;
            ++n;
            time += r.time_ms;
            reviews += r.reviews;
            if (r.gap_pct) {
                ++with_gap;
                gap += *r.gap_pct;
                if (*r.gap_pct > 1e-6) ++non_optimal;
            }
        }
        if (n == 0) return;
        out << solver << ',' << factor << ',' << level << ',' << n << ',';
        if (with_gap) out << fmt("%.4f", gap / with_gap) << ',' << fmt("%.2f", 100.0 * non_optimal / with_gap);
        else out << ',';
        out << ',' << fmt("%.3f", time / n) << ',' << fmt("%.3f", reviews / n) << '\n';
    };

    for (const auto& solver : opt.solvers) {
        for (const auto& [name, levels] : factors)
            for (const auto& level : levels)
                emit(solver, name, level, [&](const Job& j) {
                    return std::find(j.factors.begin(), j.factors.end(), std::pair{name, level}) != j.factors.end();
                });
        emit(solver, "Average", "all", [](const Job&) { return true; });
    }
    check(out, path);
}

}  // namespace

std::string format_row(const BenchmarkRow& row) {
    std::string s = row.instance + ',' + row.solver + ',' + fmt("%.6f", row.expected_cost) + ',';
    if (row.gap_pct) s += fmt("%.6f", *row.gap_pct);
    s += ',' + std::to_string(row.reviews) + ',' + fmt("%.3f", row.time_ms) + ',' +
         std::to_string(row.states_evaluated);
    return s;
}

int worker_count(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    n = std::max(1, n);
    if (const char* env = std::getenv("RSS_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return n;
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& opt, std::ostream* progress) {
    for (const auto& s : opt.solvers)
        if (s != "plain" && s != "kconvex" && s != "exact") throw std::invalid_argument("unknown solver: " + s);

    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) throw OutputError("cannot create " + opt.out_dir.string() + ": " + ec.message());

    auto jobs = make_jobs(opt);
    std::sort(jobs.begin(), jobs.end(),
              [](const Job& a, const Job& b) { return a.instance.label < b.instance.label; });

    const auto results_path = opt.out_dir / "results.csv";
    auto results = open_output(results_path);
    results << kResultsHeader << '\n' << std::flush;
    check(results, results_path);

    std::vector<std::optional<std::vector<BenchmarkRow>>> done(jobs.size());
    std::vector<BenchmarkRow> rows;
    std::size_t flushed = 0;
    std::mutex mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;

    auto worker = [&] {
        for (std::size_t k; !failed && (k = next++) < jobs.size();) {
            try {
                auto job_rows = run_job(jobs[k], opt);
                std::lock_guard lock(mutex);
                done[k] = std::move(job_rows);
                while (flushed < done.size() && done[flushed]) {
                    for (auto& r : *done[flushed]) {
                        results << format_row(r) << '\n';
                        rows.push_back(std::move(r));
                    }
                    if (progress) *progress << jobs[flushed].instance.label << " done\n";
                    ++flushed;
                }
                results.flush();
                if (!results) throw OutputError("write failed: " + results_path.string());
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };

    const int n_workers = std::min<int>(worker_count(opt.threads), std::max<int>(1, static_cast<int>(jobs.size())));
    {
        std::vector<std::jthread> pool;
        for (int w = 1; w < n_workers; ++w) pool.emplace_back(worker);
        worker();
    }
    if (error) std::rethrow_exception(error);

    write_times(opt, jobs, rows);
    write_summary(opt, jobs, rows);
    return rows;
}

}  // namespace rss
