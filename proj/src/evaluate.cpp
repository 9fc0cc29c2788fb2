#include "rss/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "rss/heuristic.hpp"

namespace rss {

bool Policy::is_review(int t) const noexcept {
    return std::any_of(reviews.begin(), reviews.end(), [t](const Review& r) { return r.t == t; });
}

std::vector<int> Policy::review_periods() const {
    std::vector<int> out;
    for (const auto& r : reviews) out.push_back(r.t);
    return out;
}

void validate(const Policy& policy, int T) {
    if (policy.reviews.empty() || policy.reviews.front().t != 1)
        throw std::invalid_argument("policy must review at period 1");
    int expected = 1;
    for (const auto& r : policy.reviews) {
        if (r.t != expected)
            throw std::invalid_argument("review at period " + std::to_string(r.t) + " does not follow the previous cycle");
        if (r.R < 1) throw std::invalid_argument("cycle length must be >= 1");
        if (r.t > T) throw std::invalid_argument("review period beyond the horizon");
        if (r.s > r.S) throw std::invalid_argument("reorder level exceeds order-up-to level");
        expected = r.t + r.R;
    }
    if (expected != T + 1) throw std::invalid_argument("policy cycles do not end at the horizon");
}

double expected_cost(const Model& model, const Policy& policy) {
    const Instance& inst = model.instance();
    const int T = inst.T;
    validate(policy, T);
    const CostParams& params = inst.params;
    const bool lost_sales = inst.beta < 1.0;

    InventoryGrid grid = model.grid();
    for (const auto& r : policy.reviews) grid.max_inv = std::max(grid.max_inv, r.S);
    const int lo = lost_sales ? grid.min_inv : grid.min_inv - model.demand().max_total();
    const int hi = grid.max_inv;
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    auto at = [lo](const std::vector<double>& v, int x) { return v[static_cast<std::size_t>(x - lo)]; };

    std::vector<const Review*> review_at(static_cast<std::size_t>(T) + 2, nullptr);
    for (const auto& r : policy.reviews) review_at[static_cast<std::size_t>(r.t)] = &r;

    std::vector<double> next(width, 0.0);
    std::vector<double> current(width);
    for (int t = T; t >= 1; --t) {
        const DemandPmf& d = model.demand().period(t);
        const auto probs = d.probs();
        const Review* review = review_at[static_cast<std::size_t>(t)];
        for (int x = lo; x <= hi; ++x) {
            double fixed = 0.0;
            int y = x;
            if (review) {
                const int opening = grid.clamp(x);
                fixed = params.W;
                if (opening < review->s) {
                    fixed += params.K;
                    y = review->S;
                } else {
                    y = opening;
                }
            }
            double expected = 0.0;
            for (std::size_t k = 0; k < probs.size(); ++k) {
                const int closing = y - d.offset() - static_cast<int>(k);
                const int carried = lost_sales ? grid.clamp(carry_over(closing, inst.beta)) : std::max(closing, lo);
                expected += probs[k] * (holding_penalty(closing, params) + at(next, carried));
            }
            current[static_cast<std::size_t>(x - lo)] = fixed + expected;
        }
        std::swap(current, next);
    }
    if (inst.I0 < lo || inst.I0 > hi) throw std::out_of_range("initial inventory outside the evaluation grid");
    return at(next, inst.I0);
}

double expected_cost(const Instance& instance, const Policy& policy, const SolverOptions& options) {
    Model model(instance, options);
    return expected_cost(model, policy);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform in [0, 1) for stream (seed, path) at position `slot`.
double uniform(std::uint64_t seed, std::int64_t path, std::uint64_t slot) {
    const std::uint64_t h =
        splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(path)) ^ slot);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Inverse-CDF sampling from the per-period pmfs.
class DemandSampler {
public:
    explicit DemandSampler(const CumulativeDemand& demand) {
        for (int t = 1; t <= demand.horizon(); ++t) {
            const DemandPmf& d = demand.period(t);
            offsets_.push_back(d.offset());
            std::vector<double> cdf;
            double acc = 0.0;
            for (double p : d.probs()) cdf.push_back(acc += p);
            cdfs_.push_back(std::move(cdf));
        }
    }

    int draw(int t, double u) const {
        const auto& cdf = cdfs_[static_cast<std::size_t>(t - 1)];
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto k = std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1);
        return offsets_[static_cast<std::size_t>(t - 1)] + static_cast<int>(k);
    }

private:
    std::vector<int> offsets_;
    std::vector<std::vector<double>> cdfs_;
};

double simulate_path(const Instance& inst, const Policy& policy, const DemandSampler& sampler,
                     std::uint64_t seed, std::int64_t path, bool continuous_normal) {
    const CostParams& p = inst.params;
    long inventory = inst.I0;
    double cost = 0.0;
    std::size_t next_review = 0;
    for (int t = 1; t <= inst.T; ++t) {
        if (next_review < policy.reviews.size() && policy.reviews[next_review].t == t) {
            const Review& r = policy.reviews[next_review++];
            cost += p.W;
            if (inventory < r.s) {
                cost += p.K;
                inventory = r.S;
            }
        }
        const auto slot = static_cast<std::uint64_t>(t) * 2;
        const double u = uniform(seed, path, slot);
        int demand_t;
        const DemandSpec& spec = inst.demand[static_cast<std::size_t>(t - 1)];
        if (continuous_normal && spec.kind == DemandKind::Normal && spec.cv > 0.0 && spec.mean > 0.0) {
            // Box-Muller on two slots of the stream
            const double u2 = uniform(seed, path, slot + 1);
            const double z = std::sqrt(-2.0 * std::log1p(-u)) * std::cos(2.0 * std::numbers::pi * u2);
            demand_t = std::max(0, static_cast<int>(std::lround(spec.mean + spec.cv * spec.mean * z)));
        } else {
            demand_t = sampler.draw(t, u);
        }
        const long closing = inventory - demand_t;
        cost += holding_penalty(closing, p);
        inventory = closing < 0 && inst.beta < 1.0 ? std::lround(inst.beta * static_cast<double>(closing)) : closing;
    }
    return cost;
}

}  // namespace

EvalReport simulate(const Instance& instance, const Policy& policy, const SimulationOptions& sim,
                    const SolverOptions& options) {
    if (sim.n_paths < 1) throw std::invalid_argument("simulation needs at least one path");
    Model model(instance, options);
    validate(policy, instance.T);

    const DemandSampler sampler(model.demand());
    std::vector<double> costs(static_cast<std::size_t>(sim.n_paths));
    auto work = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t k = begin; k < end; ++k)
            costs[static_cast<std::size_t>(k)] =
                simulate_path(instance, policy, sampler, sim.seed, k, sim.continuous_normal);
    };
    const int threads = std::max(1, std::min<int>(sim.threads, static_cast<int>(sim.n_paths)));
    if (threads == 1) {
        work(0, sim.n_paths);
    } else {
        std::vector<std::jthread> pool;
        const std::int64_t chunk = (sim.n_paths + threads - 1) / threads;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(work, w * chunk, std::min(sim.n_paths, (w + 1) * chunk));
    }

    // sequential reduction keeps the result independent of the thread count
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t k = 0; k < costs.size(); ++k) {
        const double delta = costs[k] - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (costs[k] - mean);
    }
    EvalReport report;
    report.expected_cost = expected_cost(model, policy);
    report.mc_mean = mean;
    report.n_paths = sim.n_paths;
    report.seed = sim.seed;
    if (sim.n_paths > 1) {
        const double var = m2 / static_cast<double>(sim.n_paths - 1);
        report.mc_halfwidth_95 = 1.959963984540054 * std::sqrt(var / static_cast<double>(sim.n_paths));
    }
    return report;
}

double optimality_gap(double policy_cost, double optimal_cost) {
    if (!(optimal_cost > 0.0)) throw std::invalid_argument("optimal cost must be positive");
    const double gap = (policy_cost - optimal_cost) / optimal_cost;
    if (gap < -1e-8)
        throw OracleViolation("policy cost " + std::to_string(policy_cost) + " is below the optimum " +
                              std::to_string(optimal_cost));
    return gap;
}

}  // namespace rss
