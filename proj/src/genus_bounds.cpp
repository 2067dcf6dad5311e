#include "plumbforge/genus_bounds.hpp"

#include <algorithm>
#include <limits>

#include "plumbforge/error.hpp"

namespace plumbforge {

long long step_bound_from_degree(long long genus, long long d) {
    if (d <= -1) return genus - d - 1;
    if (d <= 2 * genus - 2) return genus - (d + 1) / 2;
    return 0;
}

long long step_bound(const PlumbingGraph& g, const Cycle& l, std::size_t v) {
    if (v >= g.size()) throw Error(ErrorCode::invalid_input, "vertex out of range");
    const auto q = intersection_matrix(g);
    long long dot = 0;
    for (std::size_t w = 0; w < g.size(); ++w) dot += l[w] * q(v, w);
    return step_bound_from_degree(g.genus(v), -dot);
}

namespace {

Cycle effective_target(const PlumbingGraph& g, std::vector<std::string>* warnings) {
    auto target = floor_cycle(canonical_cycle(g));
    bool clipped = false;
    for (auto& c : target)
        if (c < 0) {
            c = 0;
            clipped = true;
        }
    if (clipped && warnings)
        warnings->push_back("floor(Z_K) has negative coefficients; bound uses its effective part");
    return target;
}

}  // namespace

long long path_bound(const PlumbingGraph& g, const LatticePath& path) {
    const auto target = effective_target(g, nullptr);
    const auto q = intersection_matrix(g);
    const std::size_t n = g.size();
    Cycle l(n, 0);
    long long total = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto v = path[i];
        if (v >= n) throw Error(ErrorCode::invalid_input, "path step " + std::to_string(i) + ": vertex out of range");
        long long dot = 0;
        for (std::size_t w = 0; w < n; ++w) dot += l[w] * q(v, w);
        total += step_bound_from_degree(g.genus(v), -dot);
        l[v] += 1;
        if (l[v] > target[v])
            throw Error(ErrorCode::invalid_input,
                        "path step " + std::to_string(i) + " leaves the box below floor(Z_K)");
    }
    if (l != target) throw Error(ErrorCode::invalid_input, "path does not end at floor(Z_K)");
    return total;
}

GenusBound best_pg_bound(const PlumbingGraph& g, std::uint64_t cap) {
    GenusBound out;
    out.target = effective_target(g, &out.warnings);
    const auto& target = out.target;
    const auto q = intersection_matrix(g);
    const std::size_t n = g.size();
    const auto step = [&](const Cycle& l, std::size_t v) {
        long long dot = 0;
        for (std::size_t w = 0; w < n; ++w) dot += l[w] * q(v, w);
        return step_bound_from_degree(g.genus(v), -dot);
    };

    const auto states = box_size(target, cap);
    if (states > cap) {
        out.exact = false;
        out.warnings.push_back("box exceeds cap " + std::to_string(cap) + "; greedy path used");
        Cycle l(n, 0);
        while (l != target) {
            std::size_t best_v = n;
            long long best = std::numeric_limits<long long>::max();
            for (std::size_t v = 0; v < n; ++v) {
                if (l[v] >= target[v]) continue;
                const auto b = step(l, v);
                if (b < best) {
                    best = b;
                    best_v = v;
                }
            }
            out.bound += best;
            out.witness.push_back(best_v);
            l[best_v] += 1;
        }
        return out;
    }

    // mixed-radix index over the box; cost[i] = cheapest completion from state i
    std::vector<std::uint64_t> stride(n, 1);
    for (std::size_t v = 1; v < n; ++v) stride[v] = stride[v - 1] * static_cast<std::uint64_t>(target[v - 1] + 1);
    std::vector<long long> cost(states, 0);
    std::vector<std::uint32_t> choice(states, static_cast<std::uint32_t>(n));
    Cycle l(n, 0);
    for (std::uint64_t idx = states; idx-- > 0;) {
        std::uint64_t rest = idx;
        for (std::size_t v = n; v-- > 0;) {
            l[v] = static_cast<long long>(rest / stride[v]);
            rest %= stride[v];
        }
        long long best = std::numeric_limits<long long>::max();
        std::uint32_t best_v = static_cast<std::uint32_t>(n);
        for (std::size_t v = 0; v < n; ++v) {
            if (l[v] >= target[v]) continue;
            const auto c = step(l, v) + cost[idx + stride[v]];
            if (c < best) {
                best = c;
                best_v = static_cast<std::uint32_t>(v);
            }
        }
        if (best_v != n) {
            cost[idx] = best;
            choice[idx] = best_v;
        }
    }
    out.bound = cost[0];
    for (std::uint64_t idx = 0; choice[idx] != n; idx += stride[choice[idx]]) out.witness.push_back(choice[idx]);
    return out;
}

}  // namespace plumbforge
