#include "rss/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rss {

void validate(const Instance& inst) {
    if (inst.T < 1) throw std::invalid_argument("instance horizon T must be >= 1");
    if (static_cast<int>(inst.demand.size()) != inst.T)
        throw std::invalid_argument("demand list length must equal T");
    validate(inst.params);
    if (!(inst.beta >= 0.0 && inst.beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
    for (const auto& d : inst.demand) {
        if (!(d.mean >= 0.0) || !std::isfinite(d.mean)) throw std::invalid_argument("demand mean must be >= 0");
        if (!(d.cv >= 0.0) || !std::isfinite(d.cv)) throw std::invalid_argument("demand cv must be >= 0");
    }
}

InventoryGrid build_grid(const CumulativeDemand& demand, int I0, double quantile_eps) {
    if (!(quantile_eps > 0.0 && quantile_eps <= 1e-4)) throw std::invalid_argument("grid eps must lie in (0, 1e-4]");
    int upper = 0;
    if (demand.horizon() > 0) {
        const int q = demand.cumulative(1, demand.horizon() + 1).quantile(1.0 - quantile_eps);
        upper = static_cast<int>(std::ceil(1.1 * q));
    }
    InventoryGrid grid{-upper, upper};
    grid.max_inv = std::max(grid.max_inv, I0);
    grid.min_inv = std::min(grid.min_inv, I0);
    return grid;
}

Model::Model(const Instance& instance, const SolverOptions& options)
    : Model(instance, [&] {
          validate(instance);
          return discretize_all(instance.demand, options.tail_eps);
      }(), options) {}

Model::Model(const Instance& instance, std::vector<DemandPmf> pmfs, const SolverOptions& options)
    : instance_(instance) {
    if (instance.T < 1) throw std::invalid_argument("instance horizon T must be >= 1");
    if (static_cast<int>(pmfs.size()) != instance.T) throw std::invalid_argument("need one demand pmf per period");
    validate(instance.params);
    if (!(instance.beta >= 0.0 && instance.beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
    demand_ = std::make_unique<CumulativeDemand>(std::move(pmfs));
    grid_ = build_grid(*demand_, instance.I0, options.grid_eps);
    costs_ = std::make_unique<CostEngine>(instance.params, *demand_, state_floor(), grid_.max_inv);
}

}  // namespace rss
