#pragma once

// Per-cycle value tables shared by the heuristic and the exact baseline.
//
// For a review at period t whose next review is at t + r, the no-order value
// of post-order inventory y is
//
//     N(y) = W + E[l_t(y - d_t, r)] + E[C_{t+r}(y - d_{t,t+r})]
//
// and the cycle table is C(i) = min(N(i), K + min_{y > i} N(y)).

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "rss/model.hpp"

namespace rss::detail {

struct CycleScan {
    std::vector<double> values;  ///< cycle table over the grid
    int reorder_level = 0;       ///< s: order iff opening inventory < s
    int order_up_to = 0;         ///< S: argmin of the table, largest on ties
    double best = 0.0;           ///< N(S)
    std::int64_t states = 0;     ///< grid states whose value was computed
    std::int64_t evaluations = 0;
};

/// E[next(max(y - D, min_inv))] for D = d_{t,t+r}; zero past the horizon (empty next).
double expected_future(const Model& model, int t, int r, std::span<const double> next, int y);

/// N(y) for the full-backlog model.
double no_order_value(Model& model, int t, int r, std::span<const double> next, int y);

/// Descending scan from max_inv that stops at the first state whose no-order
/// value exceeds the running minimum plus K; every state at or below the stop
/// gets the ordering value best + K.
template <class NoOrder>
CycleScan kconvex_scan(const InventoryGrid& grid, double K, NoOrder&& no_order) {
    CycleScan scan;
    scan.values.assign(static_cast<std::size_t>(grid.size()), 0.0);
    scan.best = std::numeric_limits<double>::infinity();
    scan.order_up_to = grid.max_inv;
    int stop = grid.min_inv - 1;
    for (int i = grid.max_inv; i >= grid.min_inv; --i) {
        const double v = no_order(i);
        ++scan.states;
        ++scan.evaluations;
        scan.values[static_cast<std::size_t>(grid.index(i))] = v;
        if (v < scan.best) {
            scan.best = v;
            scan.order_up_to = i;
        }
        if (v > scan.best + K) {
            stop = i;
            break;
        }
    }
    const double ordering = scan.best + K;
    for (int i = grid.min_inv; i <= stop; ++i) scan.values[static_cast<std::size_t>(grid.index(i))] = ordering;
    scan.reorder_level = stop + 1;
    return scan;
}

/// Exhaustive search over every order quantity keeping post-order inventory on
/// the grid. The no-order value is recomputed for every (i, q) pair.
template <class NoOrder>
CycleScan plain_scan(const InventoryGrid& grid, double K, NoOrder&& no_order) {
    CycleScan scan;
    scan.values.assign(static_cast<std::size_t>(grid.size()), 0.0);
    int last_ordering = grid.min_inv - 1;
    for (int i = grid.min_inv; i <= grid.max_inv; ++i) {
        double best = std::numeric_limits<double>::infinity();
        bool ordered = false;
        for (int q = 0; i + q <= grid.max_inv; ++q) {
            const double n = no_order(i + q);
            const double v = q > 0 ? n + K : n;
            ++scan.evaluations;
            if (v < best) {
                best = v;
                ordered = q > 0;
            }
        }
        ++scan.states;
        scan.values[static_cast<std::size_t>(grid.index(i))] = best;
        if (ordered) last_ordering = i;
    }
    scan.best = std::numeric_limits<double>::infinity();
    for (int i = grid.max_inv; i >= grid.min_inv; --i) {
        const double v = scan.values[static_cast<std::size_t>(grid.index(i))];
        if (v < scan.best) {
            scan.best = v;
            scan.order_up_to = i;
        }
    }
    scan.reorder_level = last_ordering + 1;
    return scan;
}

/// K-convex scan of a full-backlog cycle.
CycleScan scan_cycle(Model& model, int t, int r, std::span<const double> next);

/// Full no-order table N over the grid (diagnostics).
std::vector<double> no_order_table(Model& model, int t, int r, std::span<const double> next);

}  // namespace rss::detail
