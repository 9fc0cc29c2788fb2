#pragma once

#include <string>
#include <vector>

#include "rss/cost.hpp"
#include "rss/demand.hpp"

namespace rss {

/// Single-item lot-sizing instance over a T-period horizon.
struct Instance {
    int T = 0;
    CostParams params;
    int I0 = 0;                       ///< initial inventory
    std::vector<DemandSpec> demand;   ///< one entry per period
    double beta = 1.0;                ///< backlogged fraction of unmet demand (1 = full backlog)
    std::string label;

    bool operator==(const Instance&) const = default;
};

/// Throws std::invalid_argument on a malformed instance.
void validate(const Instance& instance);

/// Integer inventory levels [min_inv, max_inv]; max_order = max_inv - min_inv.
struct InventoryGrid {
    int min_inv = 0;
    int max_inv = 0;

    int max_order() const noexcept { return max_inv - min_inv; }
    int size() const noexcept { return max_inv - min_inv + 1; }
    int index(int inventory) const noexcept { return inventory - min_inv; }
    int clamp(int inventory) const noexcept { return inventory < min_inv ? min_inv : inventory; }
    bool contains(int inventory) const noexcept { return inventory >= min_inv && inventory <= max_inv; }

    bool operator==(const InventoryGrid&) const = default;
};

inline constexpr double kDefaultGridEps = 1e-5;

/// Symmetric grid sized at 110% of the (1 - quantile_eps) quantile of total
/// horizon demand, widened if needed so that it contains I0.
InventoryGrid build_grid(const CumulativeDemand& demand, int I0, double quantile_eps = kDefaultGridEps);

}  // namespace rss
