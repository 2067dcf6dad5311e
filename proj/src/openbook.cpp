#include "plumbforge/openbook.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>

#include "plumbforge/error.hpp"

namespace plumbforge {

GayMarkPage gay_mark_page(const PlumbingGraph& g) {
    const auto bad = bad_vertices(g);
    if (!bad.empty()) {
        std::string list;
        for (auto v : bad) list += (list.empty() ? "" : ",") + std::to_string(v);
        throw Error(ErrorCode::not_applicable, "bad vertices (valency exceeds -weight): " + list);
    }
    const std::size_t n = g.size();
    const auto& edges = g.edges();

    // spanning tree by BFS in edge-list order
    std::vector<bool> seen(n, false), tree(edges.size(), false);
    std::vector<std::size_t> parent(n, n), parent_edge(n, edges.size());
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [a, b] = edges[e];
            if (a != v && b != v) continue;
            const auto w = (a == v) ? b : a;
            if (seen[w]) continue;
            seen[w] = true;
            tree[e] = true;
            parent[w] = v;
            parent_edge[w] = e;
            queue.push_back(w);
        }
    }
    auto in_subtree = [&](std::size_t x, std::size_t root) {
        for (; x != n; x = parent[x])
            if (x == root) return true;
        return false;
    };

    std::vector<long long> holes(n);
    long long total_boundary = 0;
    for (std::size_t v = 0; v < n; ++v) {
        holes[v] = -g.weight(v) - static_cast<long long>(g.valency(v));
        total_boundary += holes[v];
    }
    if (total_boundary < 1) throw Error(ErrorCode::not_applicable, "page would have no boundary");

    const int genus = static_cast<int>(g.total_genus() + g.cycle_rank());
    GayMarkPage page;
    OpenBook& book = page.book;
    book.page_genus = genus;
    book.page_boundary = static_cast<int>(total_boundary);
    book.provenance = "gay_mark";
    MarkedSurface s(genus, static_cast<int>(total_boundary));
    book.word.surface = s;

    // handle numbering: vertex genera first, then non-tree edges
    int next_handle = 1;
    for (std::size_t v = 0; v < n; ++v) next_handle += static_cast<int>(g.genus(v));
    std::vector<int> handle(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!tree[e]) handle[e] = next_handle++;

    std::vector<std::vector<int>> deltas(n);
    int next_delta = 1;
    for (std::size_t v = 0; v < n; ++v)
        for (long long k = 0; k < holes[v]; ++k) deltas[v].push_back(next_delta++);

    page.regions.assign(n, {});
    for (std::size_t v = 0; v < n; ++v)
        for (int j : deltas[v]) {
            const auto idx = book.word.letters.size();
            book.word.letters.push_back({"d" + std::to_string(j), 1, s.delta(j)});
            page.regions[v].push_back({idx, 1, book.word.letters.back().name});
        }

    page.edge_letter.assign(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        HomologyClass c = s.zero();
        if (!tree[e]) {
            c = s.alpha(handle[e]);
        } else {
            const auto [a, b] = edges[e];
            const auto child = (parent[b] == a && parent_edge[b] == e) ? b : a;
            for (std::size_t x = 0; x < n; ++x)
                if (in_subtree(x, child))
                    for (int j : deltas[x]) c = add(c, s.delta(j));
            for (std::size_t f = 0; f < edges.size(); ++f) {
                if (tree[f]) continue;
                const bool first_in = in_subtree(edges[f].first, child);
                const bool second_in = in_subtree(edges[f].second, child);
                if (first_in != second_in) c = add(c, scale(s.alpha(handle[f]), first_in ? 1 : -1));
            }
        }
        const auto idx = book.word.letters.size();
        page.edge_letter[e] = idx;
        std::string name = "n" + std::to_string(edges[e].first) + "_" + std::to_string(edges[e].second);
        if (std::count(edges.begin(), edges.begin() + static_cast<long>(e), edges[e]) > 0) name += "_" + std::to_string(e);
        book.word.letters.push_back({name, 1, c});
        const auto [a, b] = edges[e];
        if (tree[e]) {
            const auto child = (parent[b] == a && parent_edge[b] == e) ? b : a;
            const auto par = (child == a) ? b : a;
            page.regions[child].push_back({idx, -1, name});
            page.regions[par].push_back({idx, 1, name});
        } else {
            page.regions[a].push_back({idx, 1, name});
            page.regions[b].push_back({idx, -1, name});
        }
    }

    for (std::size_t v = 0; v < n; ++v) {
        HomologyClass sum = s.zero();
        for (const auto& rb : page.regions[v]) sum = add(sum, scale(book.word.letters[rb.letter].cls, rb.sign));
        if (!is_zero(sum)) throw Error(ErrorCode::internal, "region boundary classes do not sum to zero");
    }
    return page;
}

OpenBook gay_mark_openbook(const PlumbingGraph& g) { return gay_mark_page(g).book; }

namespace {

// Lantern on four consecutive letters starting at 0-based first, with orientation signs.
TwistWord lantern_block(const TwistWord& w, std::size_t first, const std::array<int, 4>& signs, const std::string& tag,
                        SignatureLedger* delta) {
    std::array<HomologyClass, 4> b;
    for (std::size_t i = 0; i < 4; ++i) b[i] = scale(w.letters[first + i].cls, signs[i]);
    const std::vector<Letter> repl{
        {tag + "x12", 1, add(b[0], b[1])},
        {tag + "x13", 1, add(b[0], b[2])},
        {tag + "x23", 1, add(b[1], b[2])},
    };
    auto sub = substitute(w, first + 1, 4, Relator::lantern(), repl);
    if (delta) delta->merge(sub.delta);
    return sub.word;
}

}  // namespace

TwistWord lantern_on_region(const TwistWord& word, const std::vector<RegionBoundary>& region, const std::string& tag,
                            SignatureLedger* delta) {
    if (region.size() != 4) throw Error(ErrorCode::not_applicable, "lantern needs a four-holed sphere");
    std::vector<std::pair<std::size_t, int>> pos;
    for (const auto& rb : region) {
        const auto it = std::find_if(word.letters.begin(), word.letters.end(),
                                     [&](const Letter& l) { return l.name == rb.name; });
        if (it == word.letters.end())
            throw Error(ErrorCode::not_applicable, "region letter '" + rb.name + "' is no longer in the word");
        pos.emplace_back(static_cast<std::size_t>(it - word.letters.begin()), rb.sign);
    }
    std::sort(pos.begin(), pos.end());
    TwistWord w = word;
    for (std::size_t t = 1; t < 4; ++t) {
        w = slide_letter(w, pos[t].first, pos[0].first + t);
        pos[t].first = pos[0].first + t;
    }
    return lantern_block(w, pos[0].first, {pos[0].second, pos[1].second, pos[2].second, pos[3].second}, tag, delta);
}

namespace {

HomologyClass apply_maps(const MarkedSurface& s, const std::vector<std::pair<HomologyClass, int>>& maps,
                         HomologyClass x) {
    for (auto it = maps.rbegin(); it != maps.rend(); ++it) x = transvection(s, x, it->first, it->second);
    return x;
}

}  // namespace

TwistWord family_xgbm(int g, int b, int m) {
    if (g < 3 || b < 1 || b > 2 * g - 4 || m < 0)
        throw Error(ErrorCode::invalid_input, "family xgbm needs g >= 3, 1 <= b <= 2g-4, m >= 0");
    if (g == 3)
        throw Error(ErrorCode::not_applicable,
                    "family xgbm at g = 3 needs curves c8, c9 and a C block of negative length; defined for g >= 4");
    const MarkedSurface big(g, 2 * g - 4);
    std::map<int, HomologyClass> c;
    c[1] = big.beta(1);
    for (int i = 1; i <= g; ++i) c[2 * i] = big.alpha(i);
    for (int i = 1; i < g; ++i) c[2 * i + 1] = add(big.beta(i + 1), scale(big.beta(i), -1));
    c[2 * g + 1] = scale(big.beta(g), -1);
    // boundary curves of the neighbourhood of the chain c1 c2 c3
    const HomologyClass d = add(c[1], c[3]);
    const HomologyClass e = d;
    std::map<int, HomologyClass> x;
    for (int j = 1; j <= 2 * g - 4; ++j) x[j] = add(j <= g - 2 ? d : e, big.delta(j));

    using Maps = std::vector<std::pair<HomologyClass, int>>;
    auto tw = [&](int i, int s = 1) { return std::make_pair(c.at(i), s); };
    auto dk = [&](int k) { return apply_maps(big, {tw(k - 3, -1), tw(k - 2, -1), tw(k - 1, -1)}, c.at(k)); };
    auto ek = [&](int k) { return apply_maps(big, {tw(k - 3), tw(k - 2), tw(k - 1)}, c.at(k)); };
    auto fk = [&](int k) {
        return apply_maps(big, {tw(k - 5), tw(k - 4), tw(k - 3), tw(k - 2), tw(k - 1)}, c.at(k));
    };

    std::vector<Letter> letters;
    auto push = [&](const std::string& name, const HomologyClass& cls) { letters.push_back({name, 1, cls}); };

    Maps conj;
    for (int i = 0; i < m; ++i) conj.emplace_back(c[3], -1);
    for (int i = 0; i < m; ++i) conj.emplace_back(e, 1);
    for (const char* name : {"c4", "c3", "c2", "c1", "c1", "c2", "c3", "c4", "c4", "d", "c3", "c4"}) {
        const std::string nm(name);
        const auto& base = nm == "d" ? d : c.at(std::stoi(nm.substr(1)));
        push("A." + nm, apply_maps(big, conj, base));
    }
    for (int r = 0; r < m; ++r)
        for (int i : {1, 2, 3, 1, 2, 3, 2, 1, 3, 2}) push("A.c" + std::to_string(i), c.at(i));

    const Maps inv4d34{tw(4, -1), tw(3, -1), {d, -1}, tw(4, -1)};
    const Maps inv54{tw(4, -1), tw(5, -1)};
    push("B.c5'", apply_maps(big, inv4d34, c[5]));
    push("B.c2", c[2]);
    push("B.c6'", apply_maps(big, inv54, c[6]));
    push("B.d", d);
    push("B.c3'", apply_maps(big, {tw(4, -1)}, c[3]));
    push("B.c7", c[7]);
    push("B.c6'", apply_maps(big, inv54, c[6]));
    push("B.d", d);
    push("B.e'", apply_maps(big, {tw(4, -1)}, e));
    for (int i : {5, 3, 4, 2, 3}) push("B.c" + std::to_string(i), c.at(i));

    for (int k = 10; k <= 2 * g + 1; ++k) push("C.d" + std::to_string(k), dk(k));
    for (int k = 2 * g + 1; k >= 8; --k) push("C.e" + std::to_string(k), ek(k));

    Maps psi;
    for (int i : {4, 3, 2, 1, 5, 4, 3, 2, 6, 5, 4, 3, 7, 6, 5, 4}) psi.push_back(tw(i));
    std::vector<std::pair<std::string, HomologyClass>> dblock;
    const std::vector<int> d0 = (g % 2 == 0) ? std::vector<int>{1, 2, 3} : std::vector<int>{3, 2, 1};
    for (int rep = 0; rep < 2; ++rep)
        for (int i : d0) dblock.emplace_back("c" + std::to_string(i), c.at(i));
    for (int j = 1; j <= 2 * g - 4; ++j) dblock.emplace_back("x" + std::to_string(j), x.at(j));
    for (int k : {9, 8, 7, 6}) dblock.emplace_back("f" + std::to_string(k), fk(k));
    for (const auto& [name, cls] : dblock) push("D." + name, apply_maps(big, psi, cls));

    TwistWord w;
    w.surface = MarkedSurface(g, b);
    for (auto& l : letters) {
        l.cls = cap_boundaries(l.cls, big, w.surface);
        w.letters.push_back(l);
    }
    SignatureLedger ledger;
    ledger.add(Relator::chain(2 * g + 1), 1);
    ledger.add(Relator::chain(2 * g - 3), -1);
    ledger.add(Relator::chain(3), m - (g - 2));
    ledger.add(Relator::lantern(), 2 * g - 6);
    w.ledger = ledger;
    w.pencil_square = 2 * g - 4;
    return w;
}

namespace {

struct TorusClasses {
    MarkedSurface s;
    HomologyClass a1, a2, a3, b;
};

// curves a2, a3 differ from a1 by the boundary classes delta_p, delta_q
TorusClasses torus_classes(int boundary, int p, int q) {
    TorusClasses t{MarkedSurface(1, boundary), {}, {}, {}, {}};
    t.a1 = t.s.alpha(1);
    t.a2 = add(t.a1, t.s.delta(p));
    t.a3 = add(t.a2, t.s.delta(q));
    t.b = t.s.beta(1);
    return t;
}

std::vector<Letter> star_twelve(const TorusClasses& t) {
    std::vector<Letter> out;
    for (int r = 0; r < 3; ++r) {
        out.push_back({"s.a1", 1, t.a1});
        out.push_back({"s.a2", 1, t.a2});
        out.push_back({"s.a3", 1, t.a3});
        out.push_back({"s.b", 1, t.b});
    }
    return out;
}

}  // namespace

TwistWord family_min_elliptic(int k) {
    if (k < 0) throw Error(ErrorCode::invalid_input, "family min-elliptic needs k >= 0");
    const auto t = torus_classes(3, 2, 3);
    TwistWord w;
    w.surface = t.s;
    for (int j = 1; j <= 3; ++j) w.letters.push_back({"d" + std::to_string(j), 1, t.s.delta(j)});
    for (int i = 0; i < k; ++i) w.letters.push_back({"a1", 1, t.a1});
    for (int i = 0; i < k; ++i) w.letters.push_back({"a3", 1, t.a3});
    w.letters.push_back({"a1", 1, t.a1});
    w.letters.push_back({"a3", 1, t.a3});
    w.letters.push_back({"b", 1, t.b});
    w.letters.push_back({"a2", 1, t.a2});
    w.letters.push_back({"a3", 1, t.a3});
    w.letters.push_back({"b", 1, t.b});
    return w;
}

TwistWord family_triangle(int k) {
    if (k < 0 || k > 6)
        throw Error(ErrorCode::invalid_input, "family triangle needs 0 <= k <= 6 (D_{4,4,4+k} smoothable only for 4+4+4+k <= 22)");
    const auto t = torus_classes(3 + k, 1, 2);
    TwistWord w;
    w.surface = t.s;
    for (int j = 1; j <= 3 + k; ++j) w.letters.push_back({"d" + std::to_string(j), 1, t.s.delta(j)});
    w.letters.push_back({"a1", 1, t.a1});
    w.letters.push_back({"a2", 1, t.a2});
    w.letters.push_back({"a3", 1, t.a3});
    w.letters.push_back({"b", 1, t.b});
    return w;
}

namespace {

using SmallMatrix = std::vector<std::vector<long long>>;

// Variation on a torus page in plain machine integers; entries stay tiny for twelve letters.
SmallMatrix small_variation(const std::vector<HomologyClass>& word, std::size_t rank) {
    SmallMatrix v(rank, std::vector<long long>(rank, 0));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto& c = *it;
        for (std::size_t j = 0; j < rank; ++j) {
            const long long p = v[0][j] * c[1] - v[1][j] * c[0];
            for (std::size_t i = 0; i < rank; ++i) v[i][j] += (p + c[j]) * c[i];
        }
    }
    return v;
}

SmallMatrix multitwist_variation(const MarkedSurface& s) {
    const auto n = s.rank();
    SmallMatrix v(n, std::vector<long long>(n, 0));
    for (int j = 1; j <= s.boundary; ++j) {
        const auto d = s.delta(j);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) v[i][k] += d[i] * d[k];
    }
    return v;
}

}  // namespace

std::vector<Letter> pencil_twelve(const MarkedSurface& s) {
    if (s.genus != 1 || s.boundary < 3) throw Error(ErrorCode::invalid_input, "pencil word lives on a torus with >= 3 holes");
    // Start from the star word on three holes and split off one boundary component at a time:
    // on Sigma_1^{j+1} the new coordinate delta_j gets a {0,1,-1} pattern over the twelve letters
    // making the variation equal to that of the boundary multitwist. First pattern in base-3 order.
    std::vector<std::vector<long long>> patterns;
    for (int b = 4; b <= s.boundary; ++b) {
        const MarkedSurface stage(1, b);
        const auto t = torus_classes(b, 1, 2);
        std::vector<HomologyClass> base;
        for (const auto& l : star_twelve(t)) base.push_back(l.cls);
        for (std::size_t j = 0; j < patterns.size(); ++j)
            for (std::size_t i = 0; i < 12; ++i) base[i][4 + j] = patterns[j][i];
        const auto target = multitwist_variation(stage);
        const auto last = stage.rank() - 1;
        bool found = false;
        for (long code = 0; code < 531441 && !found; ++code) {
            auto word = base;
            std::vector<long long> z(12);
            long rest = code;
            for (std::size_t i = 0; i < 12; ++i, rest /= 3) {
                z[i] = rest % 3 == 2 ? -1 : rest % 3;
                word[i][last] += z[i];
            }
            if (small_variation(word, stage.rank()) == target) {
                patterns.push_back(z);
                found = true;
            }
        }
        if (!found)
            throw Error(ErrorCode::not_applicable,
                        "no twelve-letter pencil decoration found for " + std::to_string(b) + " boundary components");
    }
    const auto t = torus_classes(s.boundary, 1, 2);
    auto letters = star_twelve(t);
    for (std::size_t j = 0; j < patterns.size(); ++j)
        for (std::size_t i = 0; i < 12; ++i) letters[i].cls[4 + j] = patterns[j][i];
    for (auto& l : letters) l.name = "p" + l.name.substr(1);
    return letters;
}

TwistWord min_elliptic_filling(int k, int which) {
    auto w = family_min_elliptic(k);
    if (which == 1) return w;
    if (which == 2) {
        const auto t = torus_classes(3, 2, 3);
        return substitute(w, 1, 3, Relator::star(), star_twelve(t)).word;
    }
    if (which == 3) {
        // bring d2 d3 next to the unpowered pair a1 a3
        w = slide_letter(w, 2, 2 + 2 * static_cast<std::size_t>(k));
        w = slide_letter(w, 1, 1 + 2 * static_cast<std::size_t>(k));
        const std::size_t first = 1 + 2 * static_cast<std::size_t>(k);
        return lantern_block(w, first, {1, 1, 1, -1}, "L.", nullptr);
    }
    throw Error(ErrorCode::invalid_input, "filling index must be 1, 2 or 3");
}

TwistWord triangle_filling(int k, int which) {
    auto w = family_triangle(k);
    const auto nb = static_cast<std::size_t>(3 + k);
    if (which == 1) return w;
    if (which == 2) return substitute(w, 1, nb, Relator::star(), pencil_twelve(w.surface)).word;
    if (which == 3) {
        w = slide_letter(w, nb + 2, nb + 1);  // a3 before a2
        w = slide_letter(w, 1, nb - 1);       // d2 just before a1
        w = slide_letter(w, 0, nb - 2);       // d1 before d2
        return lantern_block(w, nb - 2, {1, 1, 1, -1}, "L.", nullptr);
    }
    throw Error(ErrorCode::invalid_input, "filling index must be 1, 2 or 3");
}

PlumbingGraph single_vertex_graph(long long genus, long long b) {
    if (genus < 0 || b < 1) throw Error(ErrorCode::invalid_input, "single vertex needs genus >= 0 and b >= 1");
    return PlumbingGraph({{-b, genus}}, {});
}

PlumbingGraph min_elliptic_graph(int n) {
    if (n < 1 || n % 2 == 0) throw Error(ErrorCode::invalid_input, "chain length n must be odd and positive");
    std::vector<Vertex> v{{-2, 0}, {-3, 0}};
    std::vector<Edge> e{{0, 2}, {1, 2}};
    for (int i = 0; i < n; ++i) v.push_back({-2, 0});
    for (int i = 0; i + 1 < n; ++i) e.push_back({std::size_t(2 + i), std::size_t(3 + i)});
    const std::size_t last = 1 + n;
    v.push_back({-3, 0});
    v.push_back({-3, 0});
    e.push_back({last, last + 1});
    e.push_back({last, last + 2});
    return PlumbingGraph(v, e);
}

PlumbingGraph triangle_graph(int k) {
    if (k < 0) throw Error(ErrorCode::invalid_input, "k must be nonnegative");
    return PlumbingGraph({{-1, 0}, {-4, 0}, {-4, 0}, {-4 - k, 0}}, {{0, 1}, {0, 2}, {0, 3}});
}

PlumbingGraph cusp_graph(const std::vector<long long>& weights) {
    if (weights.size() < 2) throw Error(ErrorCode::invalid_input, "a cusp cycle needs at least 2 vertices");
    std::vector<Vertex> v;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 2) throw Error(ErrorCode::invalid_input, "cusp weights must be >= 2");
        v.push_back({-weights[i], 0});
        e.push_back({i, (i + 1) % weights.size()});
    }
    return PlumbingGraph(v, e);
}

}  // namespace plumbforge
