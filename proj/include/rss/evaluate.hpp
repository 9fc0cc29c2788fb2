#pragma once

#include <cstdint>
#include <stdexcept>

#include "rss/instance.hpp"
#include "rss/model.hpp"
#include "rss/policy.hpp"

namespace rss {

/// Exact expected cost C_1(I0) of a fixed policy.
///
/// Period-by-period backward recursion on the solver's inventory grid (its top
/// widened to cover every S). Inventory is clamped to the grid floor at review
/// periods only, matching the solvers; between reviews it ranges down to
/// Model::state_floor(). With beta < 1 the carried level is truncated and
/// clamped every period.
double expected_cost(const Model& model, const Policy& policy);
double expected_cost(const Instance& instance, const Policy& policy, const SolverOptions& options = {});

struct EvalReport {
    double expected_cost = 0.0;
    double mc_mean = 0.0;
    double mc_halfwidth_95 = 0.0;
    std::int64_t n_paths = 0;
    std::uint64_t seed = 0;
};

struct SimulationOptions {
    std::int64_t n_paths = 10000;
    std::uint64_t seed = 1;
    /// Sample Normal demand from the continuous distribution (rounded, floored
    /// at zero) instead of the discretised pmf.
    bool continuous_normal = false;
    int threads = 1;
};

/// Monte-Carlo estimate of the policy cost. Path k draws its demands from a
/// counter-based stream keyed by (seed, k, period), so results do not depend
/// on the thread count.
EvalReport simulate(const Instance& instance, const Policy& policy, const SimulationOptions& sim,
                    const SolverOptions& options = {});

/// Raised when a policy beats the optimum by more than 1e-8 (relative).
class OracleViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// (policy_cost - optimal_cost) / optimal_cost.
double optimality_gap(double policy_cost, double optimal_cost);

}  // namespace rss
