#include "properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "plumbforge/envelope.hpp"
#include "plumbforge/error.hpp"
#include "plumbforge/fibration.hpp"
#include "plumbforge/genus_bounds.hpp"
#include "plumbforge/incidence.hpp"
#include "plumbforge/openbook.hpp"

namespace props {

namespace {

using namespace plumbforge;

std::string show(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string show(const PlumbingGraph& g) {
    std::ostringstream os;
    for (std::size_t v = 0; v < g.size(); ++v) os << "[" << g.weight(v) << "," << g.genus(v) << "]";
    for (const auto& [a, b] : g.edges()) os << " " << a << "-" << b;
    return os.str();
}

// Runs check() until `cases` accepted cases; check returns nullopt to skip a draw,
// otherwise an empty string on success or a failure message.
Outcome drive(std::uint64_t seed, std::size_t cases,
              const std::function<std::optional<std::string>(std::mt19937_64&)>& check) {
    std::mt19937_64 rng(seed);
    Outcome out;
    std::size_t draws = 0;
    while (out.cases < cases && draws < cases * 50) {
        ++draws;
        std::optional<std::string> r;
        try {
            r = check(rng);
        } catch (const std::exception& e) {
            r = std::string("exception: ") + e.what();
        }
        if (!r) continue;
        ++out.cases;
        if (!r->empty()) {
            if (out.failures == 0) out.first_failure = *r;
            ++out.failures;
        }
    }
    return out;
}

HomologyClass random_class(std::mt19937_64& rng, const MarkedSurface& s, long long bound) {
    std::uniform_int_distribution<long long> d(-bound, bound);
    HomologyClass c(s.rank());
    for (auto& x : c) x = d(rng);
    return c;
}

MarkedSurface random_surface(std::mt19937_64& rng, int max_genus, int max_boundary) {
    return MarkedSurface(std::uniform_int_distribution<int>(0, max_genus)(rng),
                         std::uniform_int_distribution<int>(1, max_boundary)(rng));
}

Cycle random_cycle(std::mt19937_64& rng, std::size_t n, long long bound) {
    std::uniform_int_distribution<long long> d(-bound, bound);
    Cycle c(n);
    for (auto& x : c) x = d(rng);
    return c;
}

std::optional<std::string> transvection_case(std::mt19937_64& rng) {
    const auto s = random_surface(rng, 6, 6);
    const auto x = random_class(rng, s, 3), y = random_class(rng, s, 3), c = random_class(rng, s, 2);
    const int e = rng() % 2 ? 1 : -1;
    const auto tx = transvection(s, x, c, e), ty = transvection(s, y, c, e);
    if (s.pairing(tx, ty) != s.pairing(x, y)) return "pairing changed on " + show(x) + "," + show(y) + " by " + show(c);
    if (tx != oracle::transvect(s.genus, x, c, e)) return "transvection differs from direct formula at " + show(x);
    if (transvection(s, c, c, e) != c) return "t_c(c) != c for " + show(c);
    const auto m = multiply(transvection_matrix(s, c, 1), transvection_matrix(s, c, -1));
    if (!(m == ZMatrix::identity(s.rank()))) return "t_c t_c^-1 != id for " + show(c);
    return std::string();
}

std::optional<std::string> chi_case(std::mt19937_64& rng) {
    const auto g = oracle::random_definite_graph(rng, 6, 2, true);
    const auto q = intersection_matrix(g);
    const auto l1 = random_cycle(rng, g.size(), 3), l2 = random_cycle(rng, g.size(), 3);
    Cycle sum(g.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = l1[i] + l2[i];
    const long long lhs = riemann_roch_chi(sum, g);
    const long long rhs = riemann_roch_chi(l1, g) + riemann_roch_chi(l2, g) - pairing(q, l1, l2);
    if (lhs != rhs) return "chi not quadratic on " + show(g) + " l1=" + show(l1) + " l2=" + show(l2);
    if (2 * riemann_roch_chi(l1, g) != oracle::two_chi(g, l1)) return "chi differs from raw formula on " + show(g);
    return std::string();
}

TwistWord word_of_length(std::mt19937_64& rng, std::size_t min_len) {
    for (;;) {
        auto w = oracle::random_word(rng, 3, 3, 9);
        if (w.length() >= min_len) return w;
    }
}

std::optional<std::string> hurwitz_action_case(std::mt19937_64& rng) {
    const auto w = word_of_length(rng, 2);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(1, w.length() - 1)(rng);
    const auto h = hurwitz_move(w, i);
    if (!(word_action(h) == word_action(w))) return "word_action changed by move " + std::to_string(i);
    if (!(inverse_hurwitz_move(h, i) == w)) return "inverse move did not restore the word at " + std::to_string(i);
    return std::string();
}

std::optional<std::string> hurwitz_h1_case(std::mt19937_64& rng) {
    auto w = word_of_length(rng, 2);
    const auto before = fibration_h1(w);
    const std::size_t moves = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    for (std::size_t k = 0; k < moves; ++k) {
        const std::size_t i = std::uniform_int_distribution<std::size_t>(1, w.length() - 1)(rng);
        w = rng() % 2 ? hurwitz_move(w, i) : inverse_hurwitz_move(w, i);
    }
    const auto after = fibration_h1(w);
    if (!(after == before)) return "fibration_h1 " + to_string(before) + " became " + to_string(after);
    return std::string();
}

std::optional<std::string> snf_case(std::mt19937_64& rng) {
    const auto g = oracle::random_definite_graph(rng, 7, 0, false);
    const auto q = intersection_matrix(g);
    const auto h = link_homology(g);
    const Integer det = determinant(q);
    if (det != oracle::cofactor_det(q)) return "determinant differs from cofactor expansion on " + show(g);
    Integer prod = 1;
    for (const auto& t : h.torsion) prod *= t;
    if (h.free_rank != 0) return "tree link has free part on " + show(g);
    if (prod != abs(det)) return "torsion product " + prod.get_str() + " != |det| " + Integer(abs(det)).get_str();
    if (!oracle::negative_definite_by_minors(q)) return "generator produced an indefinite tree";
    return std::string();
}

std::optional<std::string> adjunction_case(std::mt19937_64& rng) {
    const auto g = oracle::random_definite_graph(rng, 7, 3, true);
    const auto q = intersection_matrix(g);
    const auto zk = canonical_cycle(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
        Rational dot = 0;
        for (std::size_t w = 0; w < g.size(); ++w) dot += Rational(static_cast<long>(q(v, w))) * zk[w];
        if (dot != Rational(static_cast<long>(g.weight(v) + 2 - 2 * g.genus(v))))
            return "Z_K.E_" + std::to_string(v) + " wrong on " + show(g);
    }
    return std::string();
}

std::optional<std::string> zmin_case(std::mt19937_64& rng) {
    // -2 heavy weights make Z_min interesting
    auto base = oracle::random_definite_graph(rng, 6, 1, true);
    std::vector<Vertex> vs = base.vertices();
    for (std::size_t v = 0; v < vs.size(); ++v)
        if (rng() % 2) vs[v].weight = std::max(vs[v].weight + 1, -static_cast<long long>(base.valency(v)) - 1);
    for (auto& v : vs)
        if (v.weight > -2) v.weight = -2;
    const PlumbingGraph g(vs, base.edges());
    if (!is_negative_definite(g)) return std::nullopt;
    const auto z = fundamental_cycle(g);
    if (box_size(z, 100001) > 100000) return std::nullopt;
    const auto q = intersection_matrix(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
        long long dot = 0;
        for (std::size_t w = 0; w < g.size(); ++w) dot += q(v, w) * z[w];
        if (dot > 0) return "Z.E_v > 0 on " + show(g);
    }
    const auto brute = oracle::brute_zmin(g, z, 100000);
    if (!brute || *brute != z) return "scan found a smaller cycle below " + show(z) + " on " + show(g);
    return std::string();
}

std::optional<std::string> openbook_case(std::mt19937_64& rng) {
    const auto g = oracle::random_good_graph(rng, 5, 1, true);
    const auto book = gay_mark_openbook(g);
    const auto a = open_book_h1(book.word), b = link_homology(g);
    if (!(a == b)) return "open book gives " + to_string(a) + ", plumbing gives " + to_string(b) + " on " + show(g);
    // page Euler characteristic against the per-vertex count
    long long chi = 0;
    // neck circles are glued, not tubed, so edges cost nothing
    for (std::size_t v = 0; v < g.size(); ++v) chi += 2 - 2 * g.genus(v) + g.weight(v);
    if (2 - 2 * book.page_genus - book.page_boundary != chi) return "page Euler characteristic off on " + show(g);
    return std::string();
}

std::optional<std::string> lantern_case(std::mt19937_64& rng) {
    auto base = oracle::random_good_graph(rng, 5, 0, rng() % 3 == 0);
    const std::size_t v = std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng);
    if (base.valency(v) > 4) return std::nullopt;
    auto vs = base.vertices();
    vs[v].weight = -4;
    const PlumbingGraph g(vs, base.edges());
    if (!is_negative_definite(g)) return std::nullopt;
    const auto page = gay_mark_page(g);
    const auto& w = page.book.word;
    SignatureLedger delta;
    const auto l = lantern_on_region(w, page.regions[v], "L.", &delta);
    if (l.length() + 1 != w.length()) return "lantern did not shorten the word by one on " + show(g);
    if (!(word_variation(l) == word_variation(w))) return "variation changed on " + show(g);
    if (!(open_book_h1(l) == open_book_h1(w))) return "boundary H1 changed on " + show(g);
    // torsion may grow (a -4 sphere becomes the Z/2 rational ball), the free rank may not
    if (fibration_h1(l).free_rank != fibration_h1(w).free_rank) return "b1 of the filling changed on " + show(g);
    if (ledger_signature(delta) != 1) return "lantern ledger delta is not +1";
    return std::string();
}

PlumbingGraph blow_up_vertex(const PlumbingGraph& g, std::size_t v) {
    auto vs = g.vertices();
    auto es = g.edges();
    vs[v].weight -= 1;
    vs.push_back({-1, 0});
    es.push_back({v, vs.size() - 1});
    return PlumbingGraph(vs, es);
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, std::size_t e) {
    auto vs = g.vertices();
    auto es = g.edges();
    const auto [a, b] = es[e];
    vs[a].weight -= 1;
    vs[b].weight -= 1;
    vs.push_back({-1, 0});
    es.erase(es.begin() + static_cast<long>(e));
    es.push_back({a, vs.size() - 1});
    es.push_back({b, vs.size() - 1});
    return PlumbingGraph(vs, es);
}

std::optional<std::string> sandwich_case(std::mt19937_64& rng) {
    // grow something that blows down to the empty graph, then strip its (-1)-leaves
    PlumbingGraph full({{-1, 0}}, {});
    const int steps = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int k = 0; k < steps; ++k) {
        if (!full.edges().empty() && rng() % 2)
            full = blow_up_edge(full, rng() % full.edges().size());
        else
            full = blow_up_vertex(full, rng() % full.size());
    }
    std::vector<bool> drop(full.size(), false);
    unsigned removed = 0;
    for (std::size_t v = 0; v < full.size(); ++v)
        if (full.weight(v) == -1 && full.valency(v) == 1) {
            drop[v] = true;
            ++removed;
        }
    if (removed == full.size() || removed > 3) return std::nullopt;
    std::vector<std::size_t> index(full.size(), 0);
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < full.size(); ++v)
        if (!drop[v]) {
            index[v] = vs.size();
            vs.push_back(full.vertices()[v]);
        }
    std::vector<Edge> es;
    for (const auto& [a, b] : full.edges())
        if (!drop[a] && !drop[b]) es.push_back({index[a], index[b]});
    const PlumbingGraph base(vs, es);
    if (!is_negative_definite(base)) return "stripped graph is not definite: " + show(base);
    if (is_sandwiched(base, removed).status != SandwichStatus::yes) return "base not sandwiched: " + show(base);
    const auto up = (!base.edges().empty() && rng() % 2) ? blow_up_edge(base, rng() % base.edges().size())
                                                          : blow_up_vertex(base, rng() % base.size());
    if (is_sandwiched(up, removed).status != SandwichStatus::yes) return "blow-up lost sandwichedness: " + show(up);
    return std::string();
}

std::optional<std::string> step_bound_case(std::mt19937_64& rng) {
    const long long g = std::uniform_int_distribution<long long>(0, 8)(rng);
    const long long d = std::uniform_int_distribution<long long>(-12, 30)(rng);
    const long long a = step_bound_from_degree(g, d), b = step_bound_from_degree(g, d + 1);
    if (b > a) return "step bound rose from d=" + std::to_string(d) + " at genus " + std::to_string(g);
    if (a < 0) return "negative step bound";
    return std::string();
}

std::optional<std::string> pg_path_case(std::mt19937_64& rng) {
    const auto g = oracle::random_definite_graph(rng, 4, 2, false);
    const auto best = best_pg_bound(g, 200000);
    if (!best.exact) return std::nullopt;
    // a random monotone path to the same target
    LatticePath path;
    Cycle left = best.target;
    for (;;) {
        std::vector<std::size_t> open;
        for (std::size_t v = 0; v < left.size(); ++v)
            if (left[v] > 0) open.push_back(v);
        if (open.empty()) break;
        const auto v = open[rng() % open.size()];
        --left[v];
        path.push_back(v);
    }
    const long long pb = path_bound(g, path);
    if (best.bound > pb) return "DP bound " + std::to_string(best.bound) + " above a path bound " + std::to_string(pb);
    if (path_bound(g, best.witness) != best.bound) return "witness path does not realise the bound on " + show(g);
    return std::string();
}

std::optional<std::string> milnor_case(std::mt19937_64& rng) {
    const auto g = oracle::random_definite_graph(rng, 4, 2, true);
    const auto env = envelope(g, 100000);
    if (!env.minimally_elliptic || *env.minimally_elliptic || !env.p_g_exact) return std::nullopt;
    const long long b1y = env.link_b1;
    for (long long p = (b1y + 1) / 2; p <= env.p_g_max; ++p) {
        const bool gor = env.gorenstein_known && env.p_g_known && *env.p_g_known == p;
        if (env.p_g_known && *env.p_g_known != p) continue;
        const auto inv = milnor_invariants(g, p, gor);
        const auto v = classify_filling(env, inv);
        if (std::find(v.matches.begin(), v.matches.end(), "milnor") == v.matches.end())
            return "Milnor data p_g=" + std::to_string(p) + " rejected (" + v.milnor_failures.front().code + ") on " +
                   show(g);
    }
    return std::string();
}

struct Pool {
    std::vector<Envelope> envs;
    Pool() {
        std::vector<PlumbingGraph> gs;
        for (long long g = 1; g <= 4; ++g)
            for (long long b = 1; b <= 4; ++b) gs.push_back(single_vertex_graph(g, b));
        for (int k = 0; k <= 3; ++k) gs.push_back(triangle_graph(k));
        gs.push_back(min_elliptic_graph(1));
        gs.push_back(min_elliptic_graph(3));
        gs.push_back(cusp_graph({5, 4, 4}));
        gs.push_back(cusp_graph({15, 4, 4}));
        gs.push_back(PlumbingGraph({{-4, 0}}, {}));
        for (const auto& g : gs) envs.push_back(envelope(g));
    }
};

std::optional<std::string> monotone_case(std::mt19937_64& rng) {
    static const Pool pool;
    const auto& env = pool.envs[rng() % pool.envs.size()];
    FillingInvariants full;
    full.b1 = rng() % 4 == 0 ? 1 : 0;
    full.b2_zero = rng() % 3 == 0 ? static_cast<long long>(rng() % 4) : env.link_b1;
    const long long plus = static_cast<long long>(rng() % 7), minus = static_cast<long long>(rng() % 24);
    full.b2_plus = plus;
    full.b2_minus = minus;
    full.b2 = plus + minus + full.b2_zero;
    full.sigma = plus - minus;
    full.parity = rng() % 3 == 0 ? Parity::odd : (rng() % 2 ? Parity::even : Parity::unknown);
    FillingInvariants part = full;
    if (rng() % 2) part.b2_plus.reset();
    if (rng() % 2) part.b2_minus.reset();
    if (rng() % 2) part.sigma.reset();
    if (rng() % 2) part.b2.reset();
    if (rng() % 2) part.parity = Parity::unknown;
    const auto vf = classify_filling(env, full), vp = classify_filling(env, part);
    if (vp.status == VerdictStatus::unexpected && vf.status == VerdictStatus::consistent)
        return "more data turned unexpected into consistent (" + vp.reasons.front().code + ")";
    return std::string();
}

std::optional<std::string> incidence_case(std::mt19937_64& rng) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    IncidenceMatrix m{r, {}};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<long long> col(r, 0);
        while (std::all_of(col.begin(), col.end(), [](long long x) { return x == 0; }))
            for (auto& x : col) x = static_cast<long long>(rng() % 4);
        m.columns.push_back(col);
    }
    DecoratedGermData d;
    d.deltas.assign(r, 0);
    d.ls.assign(r, 0);
    std::vector<std::vector<long long>> pw(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            d.ls[i] += m.at(i, j);
            d.deltas[i] += m.at(i, j) * (m.at(i, j) - 1) / 2;
            for (std::size_t k = 0; k < r; ++k)
                if (k != i) pw[i][k] += m.at(i, j) * m.at(k, j);
        }
    if (std::any_of(d.ls.begin(), d.ls.end(), [](long long l) { return l == 0; })) return std::nullopt;
    d.pairwise = pw;
    auto shuffled = m;
    std::shuffle(shuffled.columns.begin(), shuffled.columns.end(), rng);
    const auto c1 = canonicalize(m), c2 = canonicalize(shuffled);
    if (!(c1 == c2)) return "column permutation changed the canonical form";
    if (!(canonicalize(c1) == c1) || !is_canonical(c1)) return "canonical form not idempotent";
    if (!satisfies(shuffled, d)) return "permuted matrix fails its own constraints";
    try {
        const auto all = enumerate_incidence(d, 20000);
        if (std::count(all.begin(), all.end(), c1) != 1) return "canonical matrix not listed exactly once";
        for (const auto& x : all)
            if (!satisfies(x, d) || !is_canonical(x)) return "enumeration emitted an invalid matrix";
    } catch (const Error& e) {
        if (e.code() != ErrorCode::cap_exceeded) throw;
    }
    return std::string();
}

Property make(std::string name, std::size_t n, std::optional<std::string> (*f)(std::mt19937_64&)) {
    return {std::move(name), n, [f](std::uint64_t seed, std::size_t cases) { return drive(seed, cases, f); }};
}

}  // namespace

const std::vector<Property>& all() {
    static const std::vector<Property> list = {
        make("transvection_symplectic", 1000, transvection_case),
        make("chi_quadratic", 1000, chi_case),
        make("hurwitz_word_action", 1000, hurwitz_action_case),
        make("hurwitz_fibration_h1", 1000, hurwitz_h1_case),
        make("snf_torsion_det", 600, snf_case),
        make("adjunction_residual", 600, adjunction_case),
        make("zmin_certificate", 500, zmin_case),
        make("openbook_h1_link", 500, openbook_case),
        make("lantern_substitution", 500, lantern_case),
        make("blowup_sandwiched", 500, sandwich_case),
        make("step_bound_monotone", 1000, step_bound_case),
        make("pg_bound_optimal", 500, pg_path_case),
        make("milnor_data_consistent", 500, milnor_case),
        make("verdict_monotone", 2000, monotone_case),
        make("incidence_canonical", 1000, incidence_case),
    };
    return list;
}

const Property* find(const std::string& name) {
    for (const auto& p : all())
        if (p.name == name) return &p;
    return nullptr;
}

std::vector<std::string> core_names() {
    return {"transvection_symplectic", "chi_quadratic", "hurwitz_word_action", "hurwitz_fibration_h1",
            "snf_torsion_det"};
}

}  // namespace props
