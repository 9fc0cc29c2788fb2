#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rss/demand.hpp"

namespace rss {

struct CostParams {
    double K = 0.0;  ///< fixed ordering cost
    double W = 0.0;  ///< fixed review cost
    double h = 1.0;  ///< holding cost per item and period
    double b = 0.0;  ///< penalty cost per backlogged item and period

    bool operator==(const CostParams&) const = default;
};

void validate(const CostParams& params);

/// End-of-period cost of closing inventory `inventory`.
inline double holding_penalty(long inventory, const CostParams& params) noexcept {
    return inventory >= 0 ? params.h * static_cast<double>(inventory)
                          : params.b * static_cast<double>(-inventory);
}

/// Memo store for l_t(i, r), keyed by (period, closing inventory, remaining
/// cycle length). Dense blocks cover [min_inventory, max_inventory] for every
/// (t, r); keys outside that window fall back to a hash map.
class CycleCostCache {
public:
    CycleCostCache(int horizon, int min_inventory, int max_inventory);

    std::optional<double> find(int t, int inventory, int r) const;
    void store(int t, int inventory, int r, double value);

    std::size_t size() const noexcept { return stored_; }
    int horizon() const noexcept { return horizon_; }

    /// Raw pointer to the dense block of (t, r), allocating it on first use.
    /// Entries are NaN until stored.
    double* block(int t, int r);
    int block_min() const noexcept { return min_inventory_; }
    int block_max() const noexcept { return max_inventory_; }

private:
    std::size_t slot(int t, int r) const noexcept;
    static std::uint64_t key(int t, int inventory, int r) noexcept;

    int horizon_;
    int min_inventory_;
    int max_inventory_;
    std::size_t stored_ = 0;
    std::vector<std::vector<double>> blocks_;
    std::unordered_map<std::uint64_t, double> overflow_;
};

/// Expected holding/penalty cost of review cycles, memoised over l_t.
///
/// l_t(x, r) is the expected holding/penalty cost charged at the close of
/// periods t, t+1, ..., t+r-1 when period t closes with inventory x:
///
///     l_t(x, 0)     = 0
///     l_{T+1}(x, r) = 0
///     l_t(x, r)     = hp(x) + E[l_{t+1}(x - d_{t+1}, r - 1)]
///
/// A cycle reviewed at t with post-order inventory y then costs
/// W + K[q > 0] + E[l_t(y - d_t, r)].
///
/// One engine per solve; not safe for concurrent mutation.
class CostEngine {
public:
    CostEngine(CostParams params, const CumulativeDemand& demand, int min_inventory, int max_inventory);

    const CostParams& params() const noexcept { return params_; }
    int horizon() const noexcept { return demand_->horizon(); }

    double l(int t, int inventory, int r);

    /// E[l_t(y - d_t, r)]: holding/penalty part of a cycle with post-order inventory y.
    double expected_holding(int t, int post_order, int r);

    /// f_t(i, q, r) = W + K[q > 0] + expected_holding(t, i + q, r).
    double cycle_cost(int t, int inventory, int q, int r);

    const CycleCostCache& cache() const noexcept { return cache_; }

private:
    double compute_l(int t, int inventory, int r);

    CostParams params_;
    const CumulativeDemand* demand_;
    CycleCostCache cache_;
};

}  // namespace rss
