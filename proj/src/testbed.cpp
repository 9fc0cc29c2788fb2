#include "rss/testbed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace rss {

std::string_view to_string(Pattern p) {
    switch (p) {
    case Pattern::STA: return "STA";
    case Pattern::INC: return "INC";
    case Pattern::DEC: return "DEC";
    case Pattern::LCY1: return "LCY1";
    case Pattern::LCY2: return "LCY2";
    case Pattern::RAND: return "RAND";
    }
    return "?";
}

Pattern parse_pattern(std::string_view name) {
    for (Pattern p : kAllPatterns)
        if (to_string(p) == name) return p;
    throw std::invalid_argument("unknown demand pattern: " + std::string(name));
}

namespace {

/// Uniform on [lo, hi) from the top 53 bits of a 64-bit draw (portable across standard libraries).
double draw_uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

}  // namespace

std::vector<double> pattern_means(const PatternSpec& spec) {
    if (spec.T < 1) throw std::invalid_argument("pattern horizon must be >= 1");
    if (!(spec.base_mean > 0.0)) throw std::invalid_argument("pattern base mean must be positive");
    const int T = spec.T;
    std::vector<double> shape(static_cast<std::size_t>(T), 1.0);
    std::mt19937_64 rng(spec.seed);
    for (int t = 1; t <= T; ++t) {
        const double x = T == 1 ? 0.0 : static_cast<double>(t - 1) / (T - 1);
        double& v = shape[static_cast<std::size_t>(t - 1)];
        switch (spec.kind) {
        case Pattern::STA: v = 1.0; break;
        case Pattern::INC: v = T == 1 ? 1.0 : 0.4 + 1.2 * x; break;
        case Pattern::DEC: v = T == 1 ? 1.0 : 1.6 - 1.2 * x; break;
        case Pattern::LCY1: v = 1.0 + 0.6 * std::sin(std::numbers::pi * x); break;
        case Pattern::LCY2: v = 0.4 + std::abs(std::sin(2.0 * std::numbers::pi * x)); break;
        case Pattern::RAND: v = draw_uniform(rng, 0.4, 1.6); break;
        }
    }
    const double total = std::accumulate(shape.begin(), shape.end(), 0.0);
    const double scale = spec.base_mean * T / total;
    for (double& v : shape) v *= scale;
    return shape;
}

std::vector<Instance> gen_scalability(int T, int n, std::uint64_t seed, const ScalabilityRanges& ranges) {
    if (T < 1) throw std::invalid_argument("T must be >= 1");
    if (n < 1) throw std::invalid_argument("need at least one instance");
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Instance inst;
        inst.T = T;
        inst.params.h = 1.0;
        inst.params.K = draw_uniform(rng, ranges.cost_lo, ranges.cost_hi);
        inst.params.W = draw_uniform(rng, ranges.cost_lo, ranges.cost_hi);
        inst.params.b = draw_uniform(rng, ranges.penalty_lo, ranges.penalty_hi);
        for (int t = 0; t < T; ++t)
            inst.demand.push_back(DemandSpec::poisson(draw_uniform(rng, ranges.mean_lo, ranges.mean_hi)));
        char label[48];
        std::snprintf(label, sizeof label, "scal_T%02d_%04d", T, k);
        inst.label = label;
        out.push_back(std::move(inst));
    }
    return out;
}

std::string AnalysisFactors::demand_level() const {
    if (poisson) return "poisson";
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.1f", cv);
    return buf;
}

Instance make_analysis_instance(int T, const AnalysisFactors& f, const AnalysisOptions& options) {
    Instance inst;
    inst.T = T;
    inst.params = {f.K, f.W, 1.0, 10.0};
    inst.I0 = options.I0;
    const auto means = pattern_means({f.pattern, options.base_mean, T, options.rand_seed});
    for (double m : means) inst.demand.push_back(f.poisson ? DemandSpec::poisson(m) : DemandSpec::normal(m, f.cv));
    char label[96];
    std::snprintf(label, sizeof label, "ana_T%02d_K%03d_W%03d_%s_%s", T, static_cast<int>(f.K),
                  static_cast<int>(f.W), f.poisson ? "p" : ("n" + f.demand_level()).c_str(),
                  std::string(to_string(f.pattern)).c_str());
    inst.label = label;
    return inst;
}

std::vector<AnalysisInstance> gen_analysis(int T, const AnalysisOptions& options) {
    if (T < 1) throw std::invalid_argument("T must be >= 1");
    std::vector<AnalysisFactors> models;
    models.push_back({0, 0, 0.0, true, Pattern::STA});
    for (double cv : kAnalysisCvLevels) models.push_back({0, 0, cv, false, Pattern::STA});

    std::vector<AnalysisInstance> out;
    out.reserve(750);
    for (double K : kAnalysisCostLevels)
        for (double W : kAnalysisCostLevels)
            for (const auto& m : models)
                for (Pattern p : kAllPatterns) {
                    AnalysisFactors f = m;
                    f.K = K;
                    f.W = W;
                    f.pattern = p;
                    out.push_back({make_analysis_instance(T, f, options), f});
                }
    return out;
}

}  // namespace rss
