#pragma once

#include <string>
#include <vector>

#include "plumbforge/envelope.hpp"
#include "plumbforge/mcg.hpp"

namespace plumbforge {

struct CuspFilling {
    std::vector<std::size_t> substituted;  // vertex indices whose lantern was applied
    TwistWord word;
    long long b1 = 0;
    long long b2 = 0;
    Verdict verdict;
};

struct CuspReport {
    std::vector<long long> weights;
    long long r = 0;
    long long m = 0;  // sum of (a_i - 2)
    bool non_smoothable = false;
    bool strong_family = false;
    std::vector<std::size_t> lantern_sites;   // every a_i = 4
    std::vector<std::size_t> disjoint_sites;  // largest pairwise non-adjacent subset, used for fillings
    std::vector<CuspFilling> fillings;
};

// Weights a_i >= 2, r >= 2, some a_i >= 3.
CuspReport cusp_report(const std::vector<long long>& weights, std::uint64_t cap = default_cap);

}  // namespace plumbforge
