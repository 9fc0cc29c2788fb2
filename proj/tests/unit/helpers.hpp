#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "rss/instance.hpp"

namespace testing {

struct Tiny {
    rss::Instance inst;
    std::vector<rss::DemandPmf> pmfs;
    std::vector<oracle::Pmf> ref;
};

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random instance with explicit small-support demand pmfs.
inline Tiny random_tiny(std::mt19937_64& rng, int T, int max_support = 5) {
    Tiny out;
    out.inst.T = T;
    out.inst.params = {uniform(rng, 0, 60), uniform(rng, 0, 30), uniform(rng, 0.5, 2), uniform(rng, 2, 12)};
    for (int t = 0; t < T; ++t) {
        const int offset = uniform_int(rng, 0, 3);
        const int size = uniform_int(rng, 1, max_support);
        std::vector<double> probs;
        double total = 0.0;
        for (int k = 0; k < size; ++k) total += probs.emplace_back(uniform(rng, 0.05, 1.0));
        for (double& p : probs) p /= total;
        out.pmfs.emplace_back(offset, probs);
        out.ref.push_back(oracle::from(out.pmfs.back()));
    }
    return out;
}

inline rss::Instance random_poisson(std::mt19937_64& rng, int T, double mean_lo, double mean_hi) {
    rss::Instance inst;
    inst.T = T;
    inst.params = {uniform(rng, 20, 320), uniform(rng, 20, 320), 1.0, uniform(rng, 4, 16)};
    for (int t = 0; t < T; ++t) inst.demand.push_back(rss::DemandSpec::poisson(uniform(rng, mean_lo, mean_hi)));
    return inst;
}

}  // namespace testing
