#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rss/instance.hpp"
#include "rss/model.hpp"
#include "rss/policy.hpp"

namespace rss {

/// Cost-to-go of one period together with the locally optimal cycle.
struct PeriodTable {
    int cycle_length = 0;   ///< R^a_t (0 for the terminal period T+1)
    int reorder_level = 0;  ///< s_t
    int order_up_to = 0;    ///< S_t
    std::vector<double> cost;              ///< C^a_t over the grid
    std::vector<double> candidate_minima;  ///< min of each candidate cycle table, index r-1
};

struct ValueTables {
    InventoryGrid grid;
    std::vector<PeriodTable> periods;  ///< periods[t-1] for t = 1..T+1

    int horizon() const noexcept { return static_cast<int>(periods.size()) - 1; }
    const PeriodTable& period(int t) const { return periods.at(static_cast<std::size_t>(t - 1)); }
    /// C^a_t(i), clamping i to the grid floor.
    double cost(int t, int inventory) const;
};

struct SolveStats {
    std::int64_t states_evaluated = 0;   ///< (t, r, i) states whose cycle value was computed
    std::int64_t value_evaluations = 0;  ///< cycle value evaluations, one per (i, q) in the plain sweep
    std::size_t cache_entries = 0;       ///< memoised l_t entries after the solve
};

/// No-order value table N of one candidate cycle (t, r) over the full grid.
struct CycleTableRecord {
    int t = 0;
    int r = 0;
    std::vector<double> no_order;
};

struct SolveResult {
    ValueTables tables;
    SolveStats stats;
    double expected_cost = 0.0;  ///< C^a_1(I0)
    std::vector<CycleTableRecord> cycle_tables;  ///< filled only on request
};

struct HeuristicOptions {
    bool record_cycle_tables = false;
};

/// Exhaustive sweep over inventory and order quantity for every candidate cycle.
SolveResult solve_plain(Model& model, const HeuristicOptions& options = {});
SolveResult solve_plain(const Instance& instance, const SolverOptions& options = {});

/// Same fixed point using the K-convexity early stop; no order-quantity search.
SolveResult solve_kconvex(Model& model, const HeuristicOptions& options = {});
SolveResult solve_kconvex(const Instance& instance, const SolverOptions& options = {});

/// Plain sweep with partial lost sales: a negative closing level x carries
/// over as round(beta * x). beta = 1 is the plain backlog solve.
SolveResult solve_lost_sales(Model& model);
SolveResult solve_lost_sales(const Instance& instance, const SolverOptions& options = {});

/// Forward pass from the mandatory review at period 1 following R^a_t.
Policy extract_policy(const ValueTables& tables, const Instance& instance);

/// Inventory carried into the next period from closing level x.
inline int carry_over(int closing, double beta) noexcept {
    if (closing >= 0 || beta == 1.0) return closing;
    return static_cast<int>(std::lround(beta * closing));
}

}  // namespace rss
