#pragma once

#include <span>
#include <vector>

namespace rss {

enum class DemandKind { Poisson, Normal };

/// Per-period demand model. `cv` is the coefficient of variation and is only
/// read for Normal demand (sigma = cv * mean).
struct DemandSpec {
    DemandKind kind = DemandKind::Poisson;
    double mean = 0.0;
    double cv = 0.0;

    static DemandSpec poisson(double mean) { return {DemandKind::Poisson, mean, 0.0}; }
    static DemandSpec normal(double mean, double cv) { return {DemandKind::Normal, mean, cv}; }

    bool operator==(const DemandSpec&) const = default;
};

inline constexpr double kDefaultTailEps = 1e-6;

/// Probability mass function over the integers offset, offset+1, ...
class DemandPmf {
public:
    DemandPmf() : DemandPmf(0, {1.0}) {}
    DemandPmf(int offset, std::vector<double> probs);

    static DemandPmf point_mass(int value) { return DemandPmf(value, {1.0}); }

    int offset() const noexcept { return offset_; }
    std::span<const double> probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }
    int min_value() const noexcept { return offset_; }
    int max_value() const noexcept { return offset_ + static_cast<int>(probs_.size()) - 1; }

    /// P(D = value); zero outside the support.
    double at(int value) const noexcept;

    double mean() const noexcept;
    double variance() const noexcept;
    double total_mass() const noexcept;

    /// Smallest support value v with P(D <= v) >= level.
    int quantile(double level) const noexcept;

private:
    int offset_;
    std::vector<double> probs_;
};

/// Integer-grid discretisation of a demand model, truncated once the CDF
/// reaches 1 - tail_eps and renormalised. Normal mass below -0.5 is folded into 0.
DemandPmf discretize(const DemandSpec& spec, double tail_eps = kDefaultTailEps);

/// Exact discrete convolution (distribution of the sum of independent draws).
DemandPmf convolve(const DemandPmf& a, const DemandPmf& b);

/// Sum over the support of |a - b| / 2.
double total_variation(const DemandPmf& a, const DemandPmf& b);

/// Per-period demand pmfs d_t and every cumulative pmf d_{t,j} (periods t..j-1),
/// all built at construction. Immutable afterwards, so concurrent reads are safe.
class CumulativeDemand {
public:
    explicit CumulativeDemand(std::vector<DemandPmf> per_period);

    int horizon() const noexcept { return horizon_; }

    /// Demand of period t (1-based).
    const DemandPmf& period(int t) const;

    /// Demand of periods t..j-1, 1 <= t < j <= T+1.
    const DemandPmf& cumulative(int t, int j) const;

    /// Largest total demand over the whole horizon.
    int max_total() const { return horizon_ == 0 ? 0 : cumulative(1, horizon_ + 1).max_value(); }

private:
    std::size_t index(int t, int j) const noexcept;

    int horizon_;
    std::vector<DemandPmf> table_;
};

std::vector<DemandPmf> discretize_all(std::span<const DemandSpec> specs,
                                      double tail_eps = kDefaultTailEps);

}  // namespace rss
