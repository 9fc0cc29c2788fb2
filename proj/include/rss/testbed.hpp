#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rss/instance.hpp"

namespace rss {

enum class Pattern { STA, INC, DEC, LCY1, LCY2, RAND };

inline constexpr Pattern kAllPatterns[] = {Pattern::STA,  Pattern::INC,  Pattern::DEC,
                                           Pattern::LCY1, Pattern::LCY2, Pattern::RAND};

std::string_view to_string(Pattern p);
Pattern parse_pattern(std::string_view name);

struct PatternSpec {
    Pattern kind = Pattern::STA;
    double base_mean = 50.0;
    int T = 10;
    std::uint64_t seed = 0;  ///< RAND only
};

/// Per-period mean demand, rescaled so that the total equals base_mean * T.
///
///   STA   flat
///   INC   linear ramp from 0.4 to 1.6 times the base
///   DEC   INC reversed
///   LCY1  1 + 0.6 sin(pi x), one peak
///   LCY2  0.4 + |sin(2 pi x)|, two peaks
///   RAND  independent Uniform[0.4, 1.6] factors
///
/// with x = (t-1)/(T-1).
std::vector<double> pattern_means(const PatternSpec& spec);

struct ScalabilityRanges {
    double cost_lo = 80.0, cost_hi = 320.0;     ///< K and W
    double penalty_lo = 4.0, penalty_hi = 16.0;
    double mean_lo = 30.0, mean_hi = 70.0;      ///< Poisson mean per period
};

/// n random instances: h = 1, K and W ~ U[80, 320], b ~ U[4, 16], Poisson
/// demand with per-period means ~ U[30, 70], I0 = 0.
std::vector<Instance> gen_scalability(int T, int n, std::uint64_t seed, const ScalabilityRanges& ranges = {});

/// Factor levels of one cell of the analysis design.
struct AnalysisFactors {
    double K = 0.0;
    double W = 0.0;
    double cv = 0.0;  ///< 0 for Poisson demand
    bool poisson = true;
    Pattern pattern = Pattern::STA;

    std::string demand_level() const;  ///< "poisson" or the cv value
};

struct AnalysisInstance {
    Instance instance;
    AnalysisFactors factors;
};

inline constexpr double kAnalysisCostLevels[] = {20, 40, 80, 160, 320};
inline constexpr double kAnalysisCvLevels[] = {0.1, 0.2, 0.3, 0.4};

struct AnalysisOptions {
    double base_mean = 50.0;
    std::uint64_t rand_seed = 2022;  ///< seed of the RAND pattern vector
    int I0 = 0;
};

/// Full factorial over K, W in {20, 40, 80, 160, 320}, demand in {Poisson,
/// Normal cv 0.1..0.4} and the six patterns; h = 1, b = 10. The reference
/// design uses T = 10 and T = 20.
std::vector<AnalysisInstance> gen_analysis(int T, const AnalysisOptions& options = {});

/// One analysis-style instance with explicit factors.
Instance make_analysis_instance(int T, const AnalysisFactors& factors, const AnalysisOptions& options = {});

}  // namespace rss
