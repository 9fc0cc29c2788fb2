#include "cycle.hpp"

#include <algorithm>

namespace rss::detail {

double expected_future(const Model& model, int t, int r, std::span<const double> next, int y) {
    if (next.empty()) return 0.0;
    const InventoryGrid& grid = model.grid();
    const DemandPmf& d = model.demand().cumulative(t, t + r);
    const auto probs = d.probs();
    const long room = static_cast<long>(y) - d.offset() - grid.min_inv;  // largest k staying on the grid
    const std::size_t n = probs.size();
    const std::size_t inside = room < 0 ? 0 : std::min(n, static_cast<std::size_t>(room) + 1);
    double expected = 0.0;
    for (std::size_t k = 0; k < inside; ++k)
        expected += probs[k] * next[static_cast<std::size_t>(room - static_cast<long>(k))];
    double below = 0.0;
    for (std::size_t k = inside; k < n; ++k) below += probs[k];
    return expected + below * next[0];
}

double no_order_value(Model& model, int t, int r, std::span<const double> next, int y) {
    const double holding = model.costs().expected_holding(t, y, r);
    return (model.params().W + holding) + expected_future(model, t, r, next, y);
}

CycleScan scan_cycle(Model& model, int t, int r, std::span<const double> next) {
    return kconvex_scan(model.grid(), model.params().K,
                        [&](int y) { return no_order_value(model, t, r, next, y); });
}

std::vector<double> no_order_table(Model& model, int t, int r, std::span<const double> next) {
    const InventoryGrid& grid = model.grid();
    std::vector<double> out(static_cast<std::size_t>(grid.size()));
    for (int i = grid.min_inv; i <= grid.max_inv; ++i)
        out[static_cast<std::size_t>(grid.index(i))] = no_order_value(model, t, r, next, i);
    return out;
}

}  // namespace rss::detail
