#include "plumbforge/cusp.hpp"

#include <algorithm>

#include "plumbforge/error.hpp"
#include "plumbforge/fibration.hpp"
#include "plumbforge/openbook.hpp"

namespace plumbforge {

namespace {

// Two a_i = 4 vertices next to each other on the cycle share a neck twist, so their
// lanterns cannot both be applied.
std::vector<std::size_t> largest_disjoint(const std::vector<std::size_t>& sites, std::size_t r) {
    auto adjacent = [r](std::size_t a, std::size_t b) { return (a + 1) % r == b || (b + 1) % r == a; };
    if (sites.size() > 20) {
        std::vector<std::size_t> out;
        for (auto s : sites)
            if (std::none_of(out.begin(), out.end(), [&](std::size_t t) { return adjacent(s, t); })) out.push_back(s);
        return out;
    }
    std::vector<std::size_t> best;
    for (std::uint32_t mask = 0; mask < (1u << sites.size()); ++mask) {
        std::vector<std::size_t> pick;
        bool ok = true;
        for (std::size_t i = 0; i < sites.size() && ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            for (auto t : pick) ok = ok && !adjacent(sites[i], t);
            pick.push_back(sites[i]);
        }
        if (ok && (pick.size() > best.size() || (pick.size() == best.size() && pick < best))) best = pick;
    }
    return best;
}

}  // namespace

CuspReport cusp_report(const std::vector<long long>& weights, std::uint64_t cap) {
    if (weights.size() < 2) throw Error(ErrorCode::invalid_input, "a cusp needs r >= 2 weights");
    if (std::any_of(weights.begin(), weights.end(), [](long long a) { return a < 2; }))
        throw Error(ErrorCode::invalid_input, "cusp weights must be >= 2");
    if (std::none_of(weights.begin(), weights.end(), [](long long a) { return a >= 3; }))
        throw Error(ErrorCode::invalid_input, "some cusp weight must be >= 3");

    CuspReport rep;
    rep.weights = weights;
    rep.r = static_cast<long long>(weights.size());
    long long excess = 0;
    for (auto a : weights) {
        rep.m += a - 2;
        excess += a - 3;
    }
    rep.non_smoothable = rep.m > rep.r + 9;
    rep.strong_family = excess > 9;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] == 4) rep.lantern_sites.push_back(i);
    rep.disjoint_sites = largest_disjoint(rep.lantern_sites, weights.size());

    const auto graph = cusp_graph(weights);
    const auto env = envelope(graph, cap);
    const auto page = gay_mark_page(graph);
    TwistWord w = page.book.word;
    for (std::size_t s = 0; s <= rep.disjoint_sites.size(); ++s) {
        if (s > 0) {
            const auto v = rep.disjoint_sites[s - 1];
            SignatureLedger delta;
            w = lantern_on_region(w, page.regions[v], "L" + std::to_string(v) + ".", &delta);
        }
        CuspFilling f;
        f.substituted.assign(rep.disjoint_sites.begin(), rep.disjoint_sites.begin() + static_cast<long>(s));
        f.word = w;
        const auto report = full_report(w, &graph, std::nullopt);
        f.b1 = report.h1.free_rank;
        f.b2 = report.b2;
        f.verdict = classify_filling(env, from_report(report));
        rep.fillings.push_back(std::move(f));
    }
    return rep;
}

}  // namespace plumbforge
