#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rss/instance.hpp"
#include "rss/model.hpp"
#include "rss/policy.hpp"

namespace rss {

/// Review periods, starting with the mandatory review at period 1.
struct ReviewSchedule {
    std::vector<int> periods;

    /// Builds a schedule from consecutive cycle lengths (a composition of T).
    static ReviewSchedule from_cycles(const std::vector<int>& lengths);
    std::vector<int> cycle_lengths(int T) const;

    bool operator==(const ReviewSchedule&) const = default;
    auto operator<=>(const ReviewSchedule&) const = default;
};

void validate(const ReviewSchedule& schedule, int T);

/// Every schedule with a review at period 1, in lexicographic order (2^{T-1} of them).
std::vector<ReviewSchedule> all_schedules(int T);

struct FixedScheduleResult {
    Policy policy;
    double expected_cost = 0.0;  ///< C_1(I0) under the optimal (s, S) for the schedule
    std::int64_t states_evaluated = 0;
};

/// Optimal (s, S) levels when the review schedule is fixed.
FixedScheduleResult scarf_fixed_R(Model& model, const ReviewSchedule& schedule);
FixedScheduleResult scarf_fixed_R(const Instance& instance, const ReviewSchedule& schedule,
                                  const SolverOptions& options = {});

/// Raised when an exact solve is requested above the enumeration cap.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationCap = 14;

struct EnumerationResult {
    Policy policy;
    double expected_cost = 0.0;
    ReviewSchedule schedule;
    std::int64_t schedules_evaluated = 0;
    std::int64_t states_evaluated = 0;
};

/// Optimal (R, s, S) policy by enumerating every review schedule. Schedules
/// sharing a suffix share its value tables. Ties go to the lexicographically
/// earliest schedule.
EnumerationResult enumerate_optimal(Model& model, int cap = kDefaultEnumerationCap);
EnumerationResult enumerate_optimal(const Instance& instance, const SolverOptions& options = {},
                                    int cap = kDefaultEnumerationCap);

}  // namespace rss
