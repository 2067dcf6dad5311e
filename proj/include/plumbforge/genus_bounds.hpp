#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plumbforge/plumbing.hpp"

namespace plumbforge {

using LatticePath = std::vector<std::size_t>;  // vertex added at each step

long long step_bound(const PlumbingGraph& g, const Cycle& l, std::size_t v);
long long step_bound_from_degree(long long genus, long long d);

// Throws invalid_input naming the first step that leaves [0, floor(Z_K)] or misses the target.
long long path_bound(const PlumbingGraph& g, const LatticePath& path);

struct GenusBound {
    long long bound = 0;
    bool exact = true;
    LatticePath witness;
    Cycle target;                  // effective part of floor(Z_K)
    std::vector<std::string> warnings;
};

GenusBound best_pg_bound(const PlumbingGraph& g, std::uint64_t cap = default_cap);

}  // namespace plumbforge
