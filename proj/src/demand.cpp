#include "rss/demand.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rss {

DemandPmf::DemandPmf(int offset, std::vector<double> probs)
    : offset_(offset), probs_(std::move(probs)) {
    if (offset_ < 0) throw std::invalid_argument("demand pmf offset must be >= 0");
    if (probs_.empty()) throw std::invalid_argument("demand pmf needs at least one entry");
    for (double p : probs_) {
        if (!(p >= 0.0)) throw std::invalid_argument("demand pmf probabilities must be >= 0");
    }
}

double DemandPmf::at(int value) const noexcept {
    if (value < offset_ || value > max_value()) return 0.0;
    return probs_[static_cast<std::size_t>(value - offset_)];
}

double DemandPmf::mean() const noexcept {
    double m = 0.0;
    for (std::size_t k = 0; k < probs_.size(); ++k) m += probs_[k] * (offset_ + static_cast<double>(k));
    return m;
}

double DemandPmf::variance() const noexcept {
    const double m = mean();
    double v = 0.0;
    for (std::size_t k = 0; k < probs_.size(); ++k) {
        const double d = offset_ + static_cast<double>(k) - m;
        v += probs_[k] * d * d;
    }
    return v;
}

double DemandPmf::total_mass() const noexcept {
    return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

int DemandPmf::quantile(double level) const noexcept {
    double cdf = 0.0;
    for (std::size_t k = 0; k < probs_.size(); ++k) {
        cdf += probs_[k];
        if (cdf >= level) return offset_ + static_cast<int>(k);
    }
    return max_value();
}

namespace {

void normalize(std::vector<double>& probs) {
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (double& p : probs) p /= total;
}

DemandPmf poisson_pmf(double lambda, double tail_eps) {
    if (lambda == 0.0) return DemandPmf::point_mass(0);
    std::vector<double> probs;
    const double log_lambda = std::log(lambda);
    double cdf = 0.0;
    for (int k = 0;; ++k) {
        const double p = std::exp(k * log_lambda - lambda - std::lgamma(k + 1.0));
        probs.push_back(p);
        cdf += p;
        // Past the mode the pmf only shrinks, so a vanishing term means the
        // remaining mass is below double resolution.
        if (cdf >= 1.0 - tail_eps || (k > lambda && p == 0.0)) break;
    }
    normalize(probs);
    return DemandPmf(0, std::move(probs));
}

double upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }
double lower_tail(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

DemandPmf normal_pmf(double mu, double sigma, double tail_eps) {
    if (sigma == 0.0) return DemandPmf::point_mass(static_cast<int>(std::lround(mu)));
    std::vector<double> probs;
    double cdf = lower_tail((0.5 - mu) / sigma);
    probs.push_back(cdf);
    for (int k = 1; cdf < 1.0 - tail_eps; ++k) {
        const double a = (k - 0.5 - mu) / sigma;
        const double b = (k + 0.5 - mu) / sigma;
        // difference taken on the side of the tail that keeps precision
        const double p = a > 0.0 ? upper_tail(a) - upper_tail(b) : lower_tail(b) - lower_tail(a);
        probs.push_back(p);
        cdf = lower_tail(b);
    }
    normalize(probs);
    return DemandPmf(0, std::move(probs));
}

}  // namespace

DemandPmf discretize(const DemandSpec& spec, double tail_eps) {
    if (!(spec.mean >= 0.0) || !std::isfinite(spec.mean))
        throw std::invalid_argument("demand mean must be finite and >= 0");
    if (!(tail_eps > 0.0 && tail_eps < 0.01)) throw std::invalid_argument("tail_eps must lie in (0, 0.01)");
    switch (spec.kind) {
    case DemandKind::Poisson:
        return poisson_pmf(spec.mean, tail_eps);
    case DemandKind::Normal:
        if (!(spec.cv >= 0.0) || !std::isfinite(spec.cv))
            throw std::invalid_argument("demand cv must be finite and >= 0");
        return normal_pmf(spec.mean, spec.cv * spec.mean, tail_eps);
    }
    throw std::invalid_argument("unknown demand kind");
}

DemandPmf convolve(const DemandPmf& a, const DemandPmf& b) {
    const auto pa = a.probs();
    const auto pb = b.probs();
    std::vector<double> out(pa.size() + pb.size() - 1, 0.0);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (pa[i] == 0.0) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) out[i + j] += pa[i] * pb[j];
    }
    return DemandPmf(a.offset() + b.offset(), std::move(out));
}

double total_variation(const DemandPmf& a, const DemandPmf& b) {
    const int lo = std::min(a.min_value(), b.min_value());
    const int hi = std::max(a.max_value(), b.max_value());
    double tv = 0.0;
    for (int v = lo; v <= hi; ++v) tv += std::abs(a.at(v) - b.at(v));
    return 0.5 * tv;
}

CumulativeDemand::CumulativeDemand(std::vector<DemandPmf> per_period)
    : horizon_(static_cast<int>(per_period.size())) {
    // Row t holds d_{t,t+1} .. d_{t,T+1}.
    table_.reserve(static_cast<std::size_t>(horizon_) * (horizon_ + 1) / 2);
    for (int t = 1; t <= horizon_; ++t) {
        table_.push_back(per_period[static_cast<std::size_t>(t - 1)]);
        for (int j = t + 2; j <= horizon_ + 1; ++j)
            table_.push_back(convolve(table_.back(), per_period[static_cast<std::size_t>(j - 2)]));
    }
}

std::size_t CumulativeDemand::index(int t, int j) const noexcept {
    // rows before t hold (T - s + 1) entries each for s = 1..t-1
    const std::size_t before = static_cast<std::size_t>(t - 1) * horizon_ -
                               static_cast<std::size_t>(t - 1) * (t - 2) / 2;
    return before + static_cast<std::size_t>(j - t - 1);
}

const DemandPmf& CumulativeDemand::period(int t) const { return cumulative(t, t + 1); }

const DemandPmf& CumulativeDemand::cumulative(int t, int j) const {
    if (t < 1 || t >= j || j > horizon_ + 1)
        throw std::out_of_range("cumulative demand needs 1 <= t < j <= T+1, got t=" + std::to_string(t) +
                                " j=" + std::to_string(j));
    return table_[index(t, j)];
}

std::vector<DemandPmf> discretize_all(std::span<const DemandSpec> specs, double tail_eps) {
    std::vector<DemandPmf> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back(discretize(s, tail_eps));
    return out;
}

}  // namespace rss
