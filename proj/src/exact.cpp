#include "rss/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cycle.hpp"

namespace rss {

ReviewSchedule ReviewSchedule::from_cycles(const std::vector<int>& lengths) {
    ReviewSchedule s;
    int t = 1;
    for (int r : lengths) {
        s.periods.push_back(t);
        t += r;
    }
    return s;
}

std::vector<int> ReviewSchedule::cycle_lengths(int T) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < periods.size(); ++k) {
        const int end = k + 1 < periods.size() ? periods[k + 1] : T + 1;
        out.push_back(end - periods[k]);
    }
    return out;
}

void validate(const ReviewSchedule& schedule, int T) {
    const auto& p = schedule.periods;
    if (p.empty() || p.front() != 1) throw std::invalid_argument("review schedule must start at period 1");
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] > T) throw std::invalid_argument("review period beyond the horizon");
        if (k > 0 && p[k] <= p[k - 1]) throw std::invalid_argument("review periods must be strictly increasing");
    }
}

std::vector<ReviewSchedule> all_schedules(int T) {
    if (T < 1 || T > 30) throw std::invalid_argument("all_schedules: T out of range");
    std::vector<ReviewSchedule> out;
    const std::uint32_t count = 1u << (T - 1);
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        ReviewSchedule s{{1}};
        for (int t = 2; t <= T; ++t)
            if (mask & (1u << (t - 2))) s.periods.push_back(t);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void require_backlog(const Model& model) {
    if (model.instance().beta < 1.0)
        throw std::invalid_argument("the exact baseline supports full backlog only (beta = 1)");
}

}  // namespace

FixedScheduleResult scarf_fixed_R(Model& model, const ReviewSchedule& schedule) {
    require_backlog(model);
    const int T = model.horizon();
    validate(schedule, T);
    const auto lengths = schedule.cycle_lengths(T);

    FixedScheduleResult result;
    result.policy.reviews.resize(lengths.size());
    std::vector<double> next;
    for (std::size_t k = lengths.size(); k-- > 0;) {
        const int t = schedule.periods[k];
        const int r = lengths[k];
        detail::CycleScan scan = detail::scan_cycle(model, t, r, next);
        result.states_evaluated += scan.states;
        result.policy.reviews[k] = {t, r, scan.reorder_level, scan.order_up_to};
        next = std::move(scan.values);
    }
    result.expected_cost = next[static_cast<std::size_t>(model.grid().index(model.instance().I0))];
    return result;
}

FixedScheduleResult scarf_fixed_R(const Instance& instance, const ReviewSchedule& schedule,
                                  const SolverOptions& options) {
    Model model(instance, options);
    return scarf_fixed_R(model, schedule);
}

namespace {

class Enumerator {
public:
    explicit Enumerator(Model& model) : model_(model) {}

    EnumerationResult run() {
        best_.expected_cost = std::numeric_limits<double>::infinity();
        explore(model_.horizon() + 1, {});
        return std::move(best_);
    }

private:
    // `next` is the value table at review period `start` (empty past the horizon).
    void explore(int start, std::span<const double> next) {
        for (int p = start - 1; p >= 1; --p) {
            detail::CycleScan scan = detail::scan_cycle(model_, p, start - p, next);
            best_.states_evaluated += scan.states;
            suffix_.push_back({p, start - p, scan.reorder_level, scan.order_up_to});
            if (p == 1)
                leaf(scan.values[static_cast<std::size_t>(model_.grid().index(model_.instance().I0))]);
            else
                explore(p, scan.values);
            suffix_.pop_back();
        }
    }

    void leaf(double cost) {
        ++best_.schedules_evaluated;
        ReviewSchedule schedule;
        for (auto it = suffix_.rbegin(); it != suffix_.rend(); ++it) schedule.periods.push_back(it->t);
        if (cost < best_.expected_cost || (cost == best_.expected_cost && schedule < best_.schedule)) {
            best_.expected_cost = cost;
            best_.schedule = std::move(schedule);
            best_.policy.reviews.assign(suffix_.rbegin(), suffix_.rend());
        }
    }

    Model& model_;
    std::vector<Review> suffix_;  // reviews from the horizon end backwards
    EnumerationResult best_;
};

}  // namespace

EnumerationResult enumerate_optimal(Model& model, int cap) {
    require_backlog(model);
    if (model.horizon() > cap)
        throw CapabilityError("exact enumeration is capped at T = " + std::to_string(cap) + " (got T = " +
                              std::to_string(model.horizon()) + "); use the heuristic solver");
    return Enumerator(model).run();
}

EnumerationResult enumerate_optimal(const Instance& instance, const SolverOptions& options, int cap) {
    if (instance.T > cap)
        throw CapabilityError("exact enumeration is capped at T = " + std::to_string(cap) + " (got T = " +
                              std::to_string(instance.T) + "); use the heuristic solver");
    Model model(instance, options);
    return enumerate_optimal(model, cap);
}

}  // namespace rss
