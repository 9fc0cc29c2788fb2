#pragma once

#include <memory>
#include <vector>

#include "rss/cost.hpp"
#include "rss/demand.hpp"
#include "rss/instance.hpp"

namespace rss {

struct SolverOptions {
    double grid_eps = kDefaultGridEps;
    double tail_eps = kDefaultTailEps;
};

/// Everything a solve needs for one instance: discretised demand, the
/// inventory grid and the memoised cycle-cost engine. Solvers that share a
/// Model share its cycle-cost cache.
class Model {
public:
    explicit Model(const Instance& instance, const SolverOptions& options = {});

    /// Uses the given per-period pmfs instead of discretising instance.demand.
    Model(const Instance& instance, std::vector<DemandPmf> pmfs, const SolverOptions& options = {});

    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;

    const Instance& instance() const noexcept { return instance_; }
    int horizon() const noexcept { return instance_.T; }
    const InventoryGrid& grid() const noexcept { return grid_; }
    const CumulativeDemand& demand() const noexcept { return *demand_; }
    CostEngine& costs() noexcept { return *costs_; }
    const CostParams& params() const noexcept { return instance_.params; }

    /// Lowest closing inventory reachable between two reviews.
    int state_floor() const noexcept { return grid_.min_inv - demand_->max_total(); }

private:
    Instance instance_;
    std::unique_ptr<CumulativeDemand> demand_;
    InventoryGrid grid_;
    std::unique_ptr<CostEngine> costs_;
};

}  // namespace rss
