#pragma once

#include <vector>

namespace rss {

/// One review of an (R, s, S) policy: at period t, order up to S if the
/// opening inventory is below s; the next review is at t + R.
struct Review {
    int t = 1;
    int R = 1;
    int s = 0;
    int S = 0;

    bool operator==(const Review&) const = default;
};

struct Policy {
    std::vector<Review> reviews;

    /// gamma_t: true iff t is a review period (1-based).
    bool is_review(int t) const noexcept;
    std::vector<int> review_periods() const;
    int review_count() const noexcept { return static_cast<int>(reviews.size()); }

    bool operator==(const Policy&) const = default;
};

/// Throws std::invalid_argument unless reviews start at 1, chain via t + R and
/// end exactly at T + 1, with s <= S everywhere.
void validate(const Policy& policy, int T);

}  // namespace rss
