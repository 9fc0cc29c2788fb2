#include "rss/cost.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rss {

void validate(const CostParams& p) {
    for (double v : {p.K, p.W, p.h, p.b}) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("cost parameters must be finite and >= 0");
    }
    if (!(p.h + p.b > 0.0)) throw std::invalid_argument("h + b must be positive");
}

CycleCostCache::CycleCostCache(int horizon, int min_inventory, int max_inventory)
    : horizon_(horizon), min_inventory_(min_inventory), max_inventory_(max_inventory),
      blocks_(static_cast<std::size_t>(horizon + 2) * (horizon + 1)) {
    if (min_inventory > max_inventory) throw std::invalid_argument("cache window is empty");
}

std::size_t CycleCostCache::slot(int t, int r) const noexcept {
    return static_cast<std::size_t>(t) * (horizon_ + 1) + static_cast<std::size_t>(r);
}

std::uint64_t CycleCostCache::key(int t, int inventory, int r) noexcept {
    return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(t)) << 48) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(r)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(inventory));
}

double* CycleCostCache::block(int t, int r) {
    auto& b = blocks_[slot(t, r)];
    if (b.empty())
        b.assign(static_cast<std::size_t>(max_inventory_ - min_inventory_ + 1),
                 std::numeric_limits<double>::quiet_NaN());
    return b.data();
}

std::optional<double> CycleCostCache::find(int t, int inventory, int r) const {
    if (inventory >= min_inventory_ && inventory <= max_inventory_) {
        const auto& b = blocks_[slot(t, r)];
        if (b.empty()) return std::nullopt;
        const double v = b[static_cast<std::size_t>(inventory - min_inventory_)];
        if (std::isnan(v)) return std::nullopt;
        return v;
    }
    if (auto it = overflow_.find(key(t, inventory, r)); it != overflow_.end()) return it->second;
    return std::nullopt;
}

void CycleCostCache::store(int t, int inventory, int r, double value) {
    if (inventory >= min_inventory_ && inventory <= max_inventory_) {
        double& slot_value = block(t, r)[inventory - min_inventory_];
        if (std::isnan(slot_value)) ++stored_;
        slot_value = value;
        return;
    }
    if (overflow_.insert_or_assign(key(t, inventory, r), value).second) ++stored_;
}

CostEngine::CostEngine(CostParams params, const CumulativeDemand& demand, int min_inventory, int max_inventory)
    : params_(params), demand_(&demand), cache_(demand.horizon(), min_inventory, max_inventory) {
    validate(params_);
}

double CostEngine::l(int t, int inventory, int r) {
    const int T = horizon();
    if (t < 1 || t > T + 1 || r < 0)
        throw std::out_of_range("l: period or cycle length out of range");
    if (r == 0 || t == T + 1) return 0.0;
    if (t + r > T + 1)
        throw std::out_of_range("l: cycle of length " + std::to_string(r) + " from period " + std::to_string(t) +
                                " runs past the horizon");
    if (auto hit = cache_.find(t, inventory, r)) return *hit;
    return compute_l(t, inventory, r);
}

double CostEngine::compute_l(int t, int inventory, int r) {
    double value = holding_penalty(inventory, params_);
    if (r > 1) {
        const DemandPmf& next = demand_->period(t + 1);
        const auto probs = next.probs();
        double expected = 0.0;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            const int closing = inventory - next.offset() - static_cast<int>(k);
            expected += probs[k] * l(t + 1, closing, r - 1);
        }
        value += expected;
    }
    cache_.store(t, inventory, r, value);
    return value;
}

double CostEngine::expected_holding(int t, int post_order, int r) {
    const int T = horizon();
    if (r < 1 || t < 1 || t + r > T + 1) throw std::out_of_range("expected_holding: invalid cycle");
    const DemandPmf& d = demand_->period(t);
    const auto probs = d.probs();
    const int lo = cache_.block_min();
    const int hi = cache_.block_max();
    const double* block = cache_.block(t, r);
    double expected = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const int closing = post_order - d.offset() - static_cast<int>(k);
        double v;
        if (closing >= lo && closing <= hi && !std::isnan(block[closing - lo]))
            v = block[closing - lo];
        else
            v = l(t, closing, r);
        expected += probs[k] * v;
    }
    return expected;
}

double CostEngine::cycle_cost(int t, int inventory, int q, int r) {
    if (r < 1) throw std::invalid_argument("cycle_cost: cycle length must be >= 1");
    if (q < 0) throw std::invalid_argument("cycle_cost: order quantity must be >= 0");
    const double fixed = params_.W + (q > 0 ? params_.K : 0.0);
    return fixed + expected_holding(t, inventory + q, r);
}

}  // namespace rss
