#include "rss/heuristic.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include "cycle.hpp"

namespace rss {

double ValueTables::cost(int t, int inventory) const {
    const auto& c = period(t).cost;
    if (!grid.contains(grid.clamp(inventory))) throw std::out_of_range("inventory above the grid");
    return c[static_cast<std::size_t>(grid.index(grid.clamp(inventory)))];
}

namespace {

void require_backlog(const Model& model) {
    if (model.instance().beta < 1.0)
        throw std::invalid_argument("partial lost-sales instances (beta < 1) need solve_lost_sales");
}

/// Backward sweep shared by all variants. `scan(t, r, next)` returns the cycle
/// table of a review at t followed by the next review at t + r.
template <class Scan>
SolveResult backward_sweep(Model& model, Scan&& scan, const HeuristicOptions& options) {
    const int T = model.horizon();
    const InventoryGrid& grid = model.grid();
    SolveResult result;
    result.tables.grid = grid;
    auto& periods = result.tables.periods;
    periods.resize(static_cast<std::size_t>(T) + 1);
    periods[static_cast<std::size_t>(T)].cost.assign(static_cast<std::size_t>(grid.size()), 0.0);

    for (int t = T; t >= 1; --t) {
        double best_review_cost = std::numeric_limits<double>::infinity();
        PeriodTable chosen;
        for (int r = 1; r <= T - t + 1; ++r) {
            std::span<const double> next;
            if (t + r <= T) next = periods[static_cast<std::size_t>(t + r - 1)].cost;
            detail::CycleScan cycle = scan(t, r, next);
            result.stats.states_evaluated += cycle.states;
            result.stats.value_evaluations += cycle.evaluations;
            chosen.candidate_minima.push_back(cycle.best);
            if (options.record_cycle_tables)
                result.cycle_tables.push_back({t, r, detail::no_order_table(model, t, r, next)});
            if (cycle.best < best_review_cost) {
                best_review_cost = cycle.best;
                chosen.cycle_length = r;
                chosen.reorder_level = cycle.reorder_level;
                chosen.order_up_to = cycle.order_up_to;
                chosen.cost = std::move(cycle.values);
            }
        }
        periods[static_cast<std::size_t>(t - 1)] = std::move(chosen);
    }
    result.stats.cache_entries = model.costs().cache().size();
    result.expected_cost = result.tables.cost(1, model.instance().I0);
    return result;
}

}  // namespace

SolveResult solve_plain(Model& model, const HeuristicOptions& options) {
    require_backlog(model);
    const double K = model.params().K;
    return backward_sweep(
        model,
        [&](int t, int r, std::span<const double> next) {
            return detail::plain_scan(model.grid(), K, [&](int y) {
                return detail::no_order_value(model, t, r, next, y);
            });
        },
        options);
}

SolveResult solve_kconvex(Model& model, const HeuristicOptions& options) {
    require_backlog(model);
    return backward_sweep(
        model, [&](int t, int r, std::span<const double> next) { return detail::scan_cycle(model, t, r, next); },
        options);
}

SolveResult solve_lost_sales(Model& model) {
    const double beta = model.instance().beta;
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
    if (beta == 1.0) return solve_plain(model);

    const int T = model.horizon();
    const InventoryGrid& grid = model.grid();
    const CostParams& params = model.params();
    const auto G = static_cast<std::size_t>(grid.size());

    // carried[e] holds H^e_t for the period t being processed: expected
    // holding/penalty from the opening inventory of t through the close of
    // e - 1, plus the cost-to-go of the review at e. States are truncated by
    // carry_over and clamped to the grid floor at every period.
    std::vector<std::vector<double>> carried(static_cast<std::size_t>(T) + 2);
    const std::vector<double> zeros(G, 0.0);

    auto step = [&](int t, const std::vector<double>& after) {
        const DemandPmf& d = model.demand().period(t);
        const auto probs = d.probs();
        std::vector<double> out(G);
        for (int z = grid.min_inv; z <= grid.max_inv; ++z) {
            double v = 0.0;
            for (std::size_t k = 0; k < probs.size(); ++k) {
                const int closing = z - d.offset() - static_cast<int>(k);
                const int next_state = grid.clamp(carry_over(closing, beta));
                v += probs[k] * (holding_penalty(closing, params) +
                                 after[static_cast<std::size_t>(grid.index(next_state))]);
            }
            out[static_cast<std::size_t>(grid.index(z))] = v;
        }
        return out;
    };

    auto scan = [&](int t, int r, std::span<const double> next) {
        if (r == 1) {
            // first candidate of period t, where next is C^a_{t+1}: advance every H^e to period t
            const std::vector<double> published = next.empty() ? zeros : std::vector<double>(next.begin(), next.end());
            for (int e = t + 1; e <= T + 1; ++e) {
                const auto& after = e == t + 1 ? published : carried[static_cast<std::size_t>(e)];
                carried[static_cast<std::size_t>(e)] = step(t, after);
            }
        }
        const auto& h = carried[static_cast<std::size_t>(t + r)];
        return detail::plain_scan(grid, params.K, [&](int y) {
            return params.W + h[static_cast<std::size_t>(grid.index(y))];
        });
    };
    return backward_sweep(model, scan, {});
}

SolveResult solve_plain(const Instance& instance, const SolverOptions& options) {
    Model model(instance, options);
    return solve_plain(model);
}

SolveResult solve_kconvex(const Instance& instance, const SolverOptions& options) {
    Model model(instance, options);
    return solve_kconvex(model);
}

SolveResult solve_lost_sales(const Instance& instance, const SolverOptions& options) {
    Model model(instance, options);
    return solve_lost_sales(model);
}

Policy extract_policy(const ValueTables& tables, const Instance& instance) {
    const int T = instance.T;
    if (tables.horizon() != T) throw std::invalid_argument("value tables do not cover the instance horizon");
    Policy policy;
    for (int t = 1; t <= T;) {
        const PeriodTable& p = tables.period(t);
        if (p.cycle_length < 1 || t + p.cycle_length > T + 1 || p.cost.empty())
            throw std::invalid_argument("value tables are incomplete at period " + std::to_string(t));
        policy.reviews.push_back({t, p.cycle_length, p.reorder_level, p.order_up_to});
        t += p.cycle_length;
    }
    return policy;
}

}  // namespace rss
