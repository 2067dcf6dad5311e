#include "plumbforge/plumbing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "plumbforge/error.hpp"

namespace plumbforge {

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const std::size_t n = vertices_.size();
    if (n == 0) throw Error(ErrorCode::invalid_input, "graph has no vertices");
    for (std::size_t v = 0; v < n; ++v)
        if (vertices_[v].genus < 0)
            throw Error(ErrorCode::invalid_input, "vertex " + std::to_string(v) + " has negative genus");
    adjacency_.assign(n, {});
    for (auto& e : edges_) {
        if (e.first >= n || e.second >= n)
            throw Error(ErrorCode::invalid_input, "edge endpoint out of range");
        if (e.first == e.second)
            throw Error(ErrorCode::invalid_input, "self-loop at vertex " + std::to_string(e.first));
        if (e.first > e.second) std::swap(e.first, e.second);
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != n) throw Error(ErrorCode::invalid_input, "graph is not connected");
}

long long PlumbingGraph::cycle_rank() const {
    return static_cast<long long>(edges_.size()) - static_cast<long long>(vertices_.size()) + 1;
}

long long PlumbingGraph::total_genus() const {
    long long s = 0;
    for (const auto& v : vertices_) s += v.genus;
    return s;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    IntMatrix q(g.size(), g.size());
    for (std::size_t v = 0; v < g.size(); ++v) q(v, v) = g.weight(v);
    for (const auto& [a, b] : g.edges()) {
        q(a, b) += 1;
        q(b, a) += 1;
    }
    return q;
}

bool is_negative_definite(const PlumbingGraph& g) { return is_negative_definite(intersection_matrix(g)); }

namespace {

void require_definite(const PlumbingGraph& g) {
    if (!is_negative_definite(g)) throw Error(ErrorCode::indefinite, "indefinite lattice");
}

std::vector<long long> multiply(const IntMatrix& q, const Cycle& c) {
    std::vector<long long> out(q.rows(), 0);
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) out[i] += q(i, j) * c[j];
    return out;
}

}  // namespace

std::vector<long long> adjunction_vector(const PlumbingGraph& g) {
    std::vector<long long> k(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) k[v] = g.weight(v) + 2 - 2 * g.genus(v);
    return k;
}

long long pairing(const IntMatrix& q, const Cycle& a, const Cycle& b) {
    if (a.size() != q.rows() || b.size() != q.rows()) throw Error(ErrorCode::invalid_input, "cycle dimension mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < q.cols(); ++j) s += a[i] * q(i, j) * b[j];
    }
    return s;
}

Rational pairing(const IntMatrix& q, const RationalCycle& a, const RationalCycle& b) {
    if (a.size() != q.rows() || b.size() != q.rows()) throw Error(ErrorCode::invalid_input, "cycle dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            if (q(i, j) != 0) s += a[i] * Rational(static_cast<long>(q(i, j))) * b[j];
    s.canonicalize();
    return s;
}

RationalCycle to_rational(const Cycle& c) {
    RationalCycle r;
    r.reserve(c.size());
    for (auto x : c) r.emplace_back(static_cast<long>(x));
    return r;
}

RationalCycle canonical_cycle(const PlumbingGraph& g) {
    require_definite(g);
    const auto k = adjunction_vector(g);
    return solve_exact(intersection_matrix(g), to_rational(k));
}

Rational canonical_square(const PlumbingGraph& g) {
    const auto zk = canonical_cycle(g);
    return pairing(intersection_matrix(g), zk, zk);
}

Cycle floor_cycle(const RationalCycle& c) {
    Cycle out;
    out.reserve(c.size());
    for (const auto& q : c) out.push_back(floor_to_ll(q));
    return out;
}

Cycle fundamental_cycle(const PlumbingGraph& g) {
    require_definite(g);
    const auto q = intersection_matrix(g);
    const std::size_t n = g.size();
    Cycle z(n, 1);
    auto dots = multiply(q, z);
    for (;;) {
        std::size_t v = n;
        for (std::size_t i = 0; i < n; ++i)
            if (dots[i] > 0) {
                v = i;
                break;
            }
        if (v == n) break;
        z[v] += 1;
        for (std::size_t i = 0; i < n; ++i) dots[i] += q(i, v);
    }
    return z;
}

Rational riemann_roch_chi(const RationalCycle& d, const PlumbingGraph& g) {
    const auto q = intersection_matrix(g);
    const auto zk = canonical_cycle(g);
    Rational chi = (-pairing(q, d, d) + pairing(q, d, zk)) / 2;
    chi.canonicalize();
    return chi;
}

long long riemann_roch_chi(const Cycle& l, const PlumbingGraph& g) {
    if (l.size() != g.size()) throw Error(ErrorCode::invalid_input, "cycle dimension mismatch");
    const auto q = intersection_matrix(g);
    const auto k = adjunction_vector(g);
    long long twice = -pairing(q, l, l);
    for (std::size_t v = 0; v < l.size(); ++v) twice += l[v] * k[v];
    return twice / 2;
}

bool is_rational(const PlumbingGraph& g) { return riemann_roch_chi(fundamental_cycle(g), g) == 1; }

std::uint64_t box_size(const Cycle& upper, std::uint64_t saturate_at) {
    std::uint64_t total = 1;
    for (auto m : upper) {
        const auto f = static_cast<std::uint64_t>(std::max<long long>(m, 0)) + 1;
        if (total > saturate_at / f) return saturate_at + 1;
        total *= f;
    }
    return total;
}

namespace {

bool minimally_elliptic_scan(const PlumbingGraph& g, std::uint64_t cap) {
    const auto z = fundamental_cycle(g);
    if (riemann_roch_chi(z, g) != 0) return false;
    const auto points = box_size(z, cap);
    if (points > cap)
        throw Error(ErrorCode::cap_exceeded,
                    "box too large: more than " + std::to_string(cap) + " lattice points below Z_min");
    const auto q = intersection_matrix(g);
    const auto k = adjunction_vector(g);
    const std::size_t n = g.size();
    Cycle l(n, 0);
    std::vector<long long> ql(n, 0);
    long long lk = 0;
    // odometer over the box; l = 0 is skipped by advancing first
    for (;;) {
        std::size_t i = 0;
        while (i < n && l[i] == z[i]) {
            for (std::size_t r = 0; r < n; ++r) ql[r] -= q(r, i) * l[i];
            lk -= k[i] * l[i];
            l[i] = 0;
            ++i;
        }
        if (i == n) break;
        l[i] += 1;
        for (std::size_t r = 0; r < n; ++r) ql[r] += q(r, i);
        lk += k[i];
        if (l == z) continue;
        long long ll = 0;
        for (std::size_t r = 0; r < n; ++r) ll += l[r] * ql[r];
        if (-ll + lk <= 0) return false;  // 2 chi(l) <= 0
    }
    return true;
}

}  // namespace

bool is_minimally_elliptic(const PlumbingGraph& g, std::uint64_t cap) {
    // the numerical criterion is stated on the minimal resolution
    const auto m = minimal_model(g);
    return m && minimally_elliptic_scan(*m, cap);
}

LinkHomology link_homology(const PlumbingGraph& g) {
    require_definite(g);
    const auto snf = smith_normal_form(to_integer_matrix(intersection_matrix(g)));
    LinkHomology h;
    h.free_rank = static_cast<long long>(g.size() - snf.rank) + 2 * g.total_genus() + g.cycle_rank();
    for (const auto& d : snf.factors)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

long long link_b1(const PlumbingGraph& g) { return link_homology(g).free_rank; }

std::vector<std::size_t> bad_vertices(const PlumbingGraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (static_cast<long long>(g.valency(v)) > -g.weight(v)) out.push_back(v);
    return out;
}

namespace {

struct WorkGraph {
    std::vector<long long> weight;
    std::vector<bool> alive;
    std::vector<std::vector<std::size_t>> adj;  // with multiplicity

    explicit WorkGraph(const PlumbingGraph& g) : weight(g.size()), alive(g.size(), true), adj(g.size()) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            weight[v] = g.weight(v);
            adj[v] = g.neighbours(v);
        }
    }

    void drop_neighbour(std::size_t w, std::size_t v) {
        auto it = std::find(adj[w].begin(), adj[w].end(), v);
        adj[w].erase(it);
    }

    bool blow_down_once() {
        for (std::size_t v = 0; v < weight.size(); ++v) {
            if (!alive[v] || weight[v] != -1) continue;
            const auto& nb = adj[v];
            if (nb.size() > 2) continue;
            if (nb.size() == 2 && nb[0] == nb[1]) continue;
            const auto nbs = nb;
            for (auto w : nbs) {
                drop_neighbour(w, v);
                weight[w] += 1;
            }
            if (nbs.size() == 2) {
                adj[nbs[0]].push_back(nbs[1]);
                adj[nbs[1]].push_back(nbs[0]);
            }
            adj[v].clear();
            alive[v] = false;
            return true;
        }
        return false;
    }
};

}  // namespace

bool blows_down_to_empty(const PlumbingGraph& g) {
    for (const auto& v : g.vertices())
        if (v.genus != 0) return false;
    // Greedy order suffices: contracting any admissible (-1) curve of an iterated
    // point blow-up leaves an iterated point blow-up.
    WorkGraph w(g);
    while (w.blow_down_once()) {
    }
    return std::none_of(w.alive.begin(), w.alive.end(), [](bool a) { return a; });
}

SandwichResult is_sandwiched(const PlumbingGraph& g, unsigned max_extra) {
    SandwichResult res;
    if (g.total_genus() > 0) {
        res.status = SandwichStatus::no;
        res.note = "positive genus vertex";
        return res;
    }
    if (g.cycle_rank() > 0) {
        res.status = SandwichStatus::no;
        res.note = "graph has a cycle";
        return res;
    }
    require_definite(g);
    const std::size_t n = g.size();
    for (unsigned s = 0; s <= max_extra; ++s) {
        std::vector<std::size_t> pick(s, 0);
        for (;;) {
            auto verts = g.vertices();
            auto edges = g.edges();
            for (auto v : pick) {
                edges.emplace_back(v, verts.size());
                verts.push_back({-1, 0});
            }
            PlumbingGraph completed(verts, edges);
            if (blows_down_to_empty(completed)) {
                res.status = SandwichStatus::yes;
                res.completion = completed;
                res.attached_at = pick;
                return res;
            }
            // next non-decreasing sequence
            std::size_t i = s;
            while (i > 0 && pick[i - 1] == n - 1) --i;
            if (i == 0) break;
            const auto val = pick[i - 1] + 1;
            for (std::size_t j = i - 1; j < s; ++j) pick[j] = val;
        }
    }
    res.status = SandwichStatus::unknown;
    res.note = "no completion with at most " + std::to_string(max_extra) + " extra vertices";
    return res;
}

std::optional<PlumbingGraph> minimal_model(const PlumbingGraph& g) {
    require_definite(g);
    auto q = intersection_matrix(g);
    std::vector<long long> genus(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) genus[v] = g.genus(v);
    std::vector<bool> alive(g.size(), true);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (!alive[v] || q(v, v) != -1 || genus[v] != 0) continue;
            // contracting E_v: Q' = Q + q q^T on the remaining curves
            for (std::size_t a = 0; a < g.size(); ++a) {
                if (!alive[a] || a == v) continue;
                const long long qa = q(a, v);
                if (qa == 0) continue;
                genus[a] += qa * (qa - 1) / 2;
                for (std::size_t b = 0; b < g.size(); ++b)
                    if (alive[b] && b != v) q(a, b) += qa * q(b, v);
            }
            alive[v] = false;
            changed = true;
        }
    }
    std::vector<std::size_t> index(g.size(), 0);
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (alive[v]) {
            index[v] = vs.size();
            vs.push_back({q(v, v), genus[v]});
        }
    if (vs.empty()) return std::nullopt;
    std::vector<Edge> es;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (alive[a] && alive[b])
                for (long long t = 0; t < q(a, b); ++t) es.push_back({index[a], index[b]});
    return PlumbingGraph(vs, es);
}

long long minimal_resolution_b2(const PlumbingGraph& g) {
    const auto m = minimal_model(g);
    return m ? static_cast<long long>(m->size()) : 0;
}

std::optional<std::vector<long long>> cusp_weights(const PlumbingGraph& g) {
    const std::size_t r = g.size();
    if (r < 2 || g.cycle_rank() != 1 || g.total_genus() != 0) return std::nullopt;
    for (std::size_t v = 0; v < r; ++v)
        if (g.valency(v) != 2) return std::nullopt;
    std::vector<long long> a;
    std::size_t prev = r, cur = 0;
    for (std::size_t step = 0; step < r; ++step) {
        a.push_back(-g.weight(cur));
        const auto& nb = g.neighbours(cur);
        std::size_t next = (nb[0] != prev) ? nb[0] : nb[1];
        if (r == 2) next = nb[0];
        prev = cur;
        cur = next;
    }
    return a;
}

const char* to_string(SandwichStatus s) {
    switch (s) {
        case SandwichStatus::yes: return "yes";
        case SandwichStatus::no: return "no";
        case SandwichStatus::unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace plumbforge
