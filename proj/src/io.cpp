#include "plumbforge/io.hpp"

#include <set>
#include <sstream>

#include "plumbforge/error.hpp"

namespace plumbforge {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

// Splits into lines of tokens, dropping comments and blank lines; keeps line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(const std::string& text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (!toks.empty()) out.push_back({no, std::move(toks)});
    }
    return out;
}

long long to_ll(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) fail(line, "not an integer: '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(line, "not an integer: '" + s + "'");
    }
}

void expect(const std::vector<std::string>& t, std::size_t i, const char* word, std::size_t line) {
    if (i >= t.size() || t[i] != word) fail(line, std::string("expected '") + word + "'");
}

Json integer(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json rational(const Rational& q) { return to_string(q); }

template <typename T>
Json opt(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

const char* first_non_space(const std::string& s) {
    for (const char& c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return &c;
    return nullptr;
}

}  // namespace

PlumbingGraph parse_graph_text(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw Error(ErrorCode::parse, "empty graph file");
    const auto& [hl, head] = lines.front();
    expect(head, 0, "vertices", hl);
    if (head.size() != 2) fail(hl, "expected 'vertices N'");
    const long long n = to_ll(head[1], hl);
    if (n < 1) fail(hl, "need at least one vertex");
    std::vector<std::optional<Vertex>> vs(static_cast<std::size_t>(n));
    std::vector<Edge> es;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [no, t] = lines[k];
        if (t[0] == "v") {
            if (t.size() != 6) fail(no, "expected 'v <i> weight <w> genus <g>'");
            expect(t, 2, "weight", no);
            expect(t, 4, "genus", no);
            const long long i = to_ll(t[1], no);
            if (i < 0 || i >= n) fail(no, "vertex index out of range");
            if (vs[static_cast<std::size_t>(i)]) fail(no, "vertex " + t[1] + " listed twice");
            const long long g = to_ll(t[5], no);
            if (g < 0) fail(no, "negative genus");
            vs[static_cast<std::size_t>(i)] = Vertex{to_ll(t[3], no), g};
        } else if (t[0] == "e") {
            if (t.size() != 3) fail(no, "expected 'e <i> <j>'");
            const long long i = to_ll(t[1], no), j = to_ll(t[2], no);
            if (i < 0 || j < 0 || i >= n || j >= n) fail(no, "edge endpoint out of range");
            es.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
        } else {
            fail(no, "unknown record '" + t[0] + "'");
        }
    }
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i]) throw Error(ErrorCode::parse, "vertex " + std::to_string(i) + " missing");
        out.push_back(*vs[i]);
    }
    return PlumbingGraph(out, es);
}

PlumbingGraph parse_graph_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
        std::vector<Vertex> vs;
        for (const auto& v : j.at("vertices")) {
            const long long g = v.contains("genus") ? v.at("genus").get<long long>() : 0;
            if (g < 0) throw Error(ErrorCode::parse, "negative genus");
            vs.push_back({v.at("weight").get<long long>(), g});
        }
        std::vector<Edge> es;
        for (const auto& e : j.value("edges", Json::array())) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::parse, "edges must be pairs");
            const auto a = e[0].get<long long>(), b = e[1].get<long long>();
            const auto n = static_cast<long long>(vs.size());
            if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorCode::parse, "edge endpoint out of range");
            es.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
        }
        return PlumbingGraph(vs, es);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, std::string("graph JSON: ") + e.what());
    }
}

PlumbingGraph parse_graph(const std::string& text) {
    const char* c = first_non_space(text);
    if (c && *c == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

std::string graph_to_text(const PlumbingGraph& g) {
    std::ostringstream out;
    out << "vertices " << g.size() << "\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        out << "v " << v << " weight " << g.weight(v) << " genus " << g.genus(v) << "\n";
    for (const auto& [a, b] : g.edges()) out << "e " << a << " " << b << "\n";
    return out.str();
}

Json graph_to_json(const PlumbingGraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : g.vertices()) j["vertices"].push_back({{"weight", v.weight}, {"genus", v.genus}});
    j["edges"] = Json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
    return j;
}

TwistWord parse_word_text(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw Error(ErrorCode::parse, "empty word file");
    const auto& [hl, head] = lines.front();
    if (head.size() != 5) fail(hl, "expected 'surface g <g> b <b>'");
    expect(head, 0, "surface", hl);
    expect(head, 1, "g", hl);
    expect(head, 3, "b", hl);
    const long long g = to_ll(head[2], hl), b = to_ll(head[4], hl);
    if (g < 0 || b < 1) fail(hl, "need g >= 0 and b >= 1");
    TwistWord w;
    w.surface = MarkedSurface(static_cast<int>(g), static_cast<int>(b));
    const std::size_t rank = w.surface.rank();
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [no, t] = lines[k];
        if (t[0] == "twist") {
            if (t.size() != 5 + rank) fail(no, "expected 'twist <name> exp <e> class' and " + std::to_string(rank) + " coefficients");
            expect(t, 2, "exp", no);
            expect(t, 4, "class", no);
            Letter l;
            l.name = t[1];
            const long long e = to_ll(t[3], no);
            if (e != 1 && e != -1) fail(no, "exponent must be 1 or -1");
            l.exponent = static_cast<int>(e);
            for (std::size_t i = 0; i < rank; ++i) l.cls.push_back(to_ll(t[5 + i], no));
            w.letters.push_back(std::move(l));
        } else if (t[0] == "ledger") {
            if (!w.ledger) w.ledger = SignatureLedger{};
            if (t.size() == 1) continue;
            if (t.size() != 3) fail(no, "expected 'ledger <relator> <count>'");
            try {
                w.ledger->add(Relator::parse(t[1]), to_ll(t[2], no));
            } catch (const Error& e) {
                fail(no, e.what());
            }
        } else if (t[0] == "pencil") {
            if (t.size() != 2) fail(no, "expected 'pencil <n>'");
            w.pencil_square = to_ll(t[1], no);
        } else {
            fail(no, "unknown record '" + t[0] + "'");
        }
    }
    w.validate();
    return w;
}

TwistWord parse_word_json(const std::string& text) {
    try {
        const auto j = Json::parse(text);
        TwistWord w;
        w.surface = MarkedSurface(j.at("surface").at("genus").get<int>(), j.at("surface").at("boundary").get<int>());
        for (const auto& l : j.at("letters"))
            w.letters.push_back({l.at("name").get<std::string>(), l.value("exp", 1), l.at("class").get<HomologyClass>()});
        if (j.contains("ledger") && !j.at("ledger").is_null()) {
            w.ledger = SignatureLedger{};
            for (const auto& [r, n] : j.at("ledger").items()) w.ledger->add(Relator::parse(r), n.get<long long>());
        }
        if (j.contains("pencil") && !j.at("pencil").is_null()) w.pencil_square = j.at("pencil").get<long long>();
        w.validate();
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, std::string("word JSON: ") + e.what());
    }
}

TwistWord parse_word(const std::string& text) {
    const char* c = first_non_space(text);
    if (c && *c == '{') return parse_word_json(text);
    return parse_word_text(text);
}

std::string word_to_text(const TwistWord& w) {
    std::ostringstream out;
    out << "surface g " << w.surface.genus << " b " << w.surface.boundary << "\n";
    for (const auto& l : w.letters) {
        out << "twist " << l.name << " exp " << l.exponent << " class";
        for (auto c : l.cls) out << " " << c;
        out << "\n";
    }
    if (w.ledger) {
        if (w.ledger->entries.empty()) out << "ledger\n";
        for (const auto& [r, n] : w.ledger->entries) out << "ledger " << r.token() << " " << n << "\n";
    }
    if (w.pencil_square) out << "pencil " << *w.pencil_square << "\n";
    return out.str();
}

Json word_to_json(const TwistWord& w) {
    Json j;
    j["surface"] = {{"genus", w.surface.genus}, {"boundary", w.surface.boundary}};
    j["letters"] = Json::array();
    for (const auto& l : w.letters) j["letters"].push_back({{"name", l.name}, {"exp", l.exponent}, {"class", l.cls}});
    if (w.ledger) {
        Json led = Json::object();
        for (const auto& [r, n] : w.ledger->entries) led[r.token()] = n;
        j["ledger"] = led;
    } else {
        j["ledger"] = nullptr;
    }
    j["pencil"] = opt(w.pencil_square);
    return j;
}

FillingInvariants parse_invariants(const std::string& text) {
    try {
        const auto j = Json::parse(text);
        auto get = [&](const char* k) -> std::optional<long long> {
            if (!j.contains(k) || j.at(k).is_null() || j.at(k) == "unknown") return std::nullopt;
            return j.at(k).get<long long>();
        };
        FillingInvariants f;
        f.b1 = get("b1").value_or(0);
        if (!get("b2_zero")) throw Error(ErrorCode::parse, "invariants need b2_zero");
        f.b2_zero = *get("b2_zero");
        f.b2 = get("b2");
        f.b2_plus = get("b2_plus");
        f.b2_minus = get("b2_minus");
        f.sigma = get("sigma");
        if (j.contains("parity") && !j.at("parity").is_null()) f.parity = parse_parity(j.at("parity").get<std::string>());
        const auto euler = get("euler");
        if (euler && !f.b2) f.b2 = *euler - 1 + f.b1;
        f.normalize();
        if (euler && *f.euler() != *euler)
            throw Error(ErrorCode::inconsistent, "inconsistent invariants: euler != 1 - b1 + b2");
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, std::string("invariants JSON: ") + e.what());
    }
}

Json to_json(const FillingInvariants& f) {
    return {{"b1", f.b1},           {"b2", opt(f.b2)},       {"b2_plus", opt(f.b2_plus)}, {"b2_minus", opt(f.b2_minus)},
            {"b2_zero", f.b2_zero}, {"euler", opt(f.euler())}, {"sigma", opt(f.sigma)},     {"parity", to_string(f.parity)}};
}

Json to_json(const LinkHomology& h) {
    Json t = Json::array();
    for (const auto& z : h.torsion) t.push_back(integer(z));
    return {{"free_rank", h.free_rank}, {"torsion", t}, {"text", to_string(h)}};
}

Json to_json(const GenusBound& b) {
    return {{"bound", b.bound}, {"exact", b.exact}, {"witness_path", b.witness}, {"target", b.target}, {"warnings", b.warnings}};
}

Json to_json(const SandwichResult& s) {
    Json j{{"status", to_string(s.status)}};
    j["completion"] = s.completion ? graph_to_json(*s.completion) : Json(nullptr);
    j["attached_at"] = s.attached_at;
    j["note"] = s.note;
    return j;
}

Json to_json(const Envelope& e) {
    Json j;
    j["vertex_count"] = e.vertex_count;
    j["link_b1"] = e.link_b1;
    j["zk_square"] = rational(e.zk_square);
    j["p_g_max"] = e.p_g_max;
    j["p_g_exact"] = e.p_g_exact;
    j["p_g_known"] = opt(e.p_g_known);
    j["b2_zero_required"] = e.b2_zero_required;
    j["b2_plus_max"] = e.b2_plus_max;
    j["rational"] = e.rational;
    j["minimally_elliptic"] = opt(e.minimally_elliptic);
    j["gorenstein_known"] = e.gorenstein_known;
    j["gorenstein"] = Json::array();
    for (const auto& r : e.gorenstein)
        j["gorenstein"].push_back(
            {{"p_g", r.p_g}, {"mu", r.mu}, {"sigma", r.sigma}, {"b2_plus", r.b2_plus}, {"b2_minus", r.b2_minus}});
    if (e.lin) {
        j["lin"] = {{"b2_plus", e.lin->b2_plus},
                    {"even_form", true},
                    {"b2_minus_mod_8", e.lin->homology_sphere ? Json(2) : Json(nullptr)}};
    } else {
        j["lin"] = nullptr;
    }
    if (e.chi_bound)
        j["chi_bound"] = {{"euler_max", e.chi_bound->euler_max}, {"stein_min_2chi_3sigma", e.chi_bound->stein_min}};
    else
        j["chi_bound"] = "bound exists but unevaluated";
    j["smoothable"] = e.smoothable;
    j["minimal_resolution"] = {{"b1", e.minimal_resolution.b1},
                               {"b2", e.minimal_resolution.b2},
                               {"b2_zero", 0},
                               {"b2_plus", 0},
                               {"sigma", -e.minimal_resolution.b2}};
    j["warnings"] = e.warnings;
    return j;
}

Json to_json(const Verdict& v) {
    auto reasons = [](const std::vector<Reason>& rs) {
        Json a = Json::array();
        for (const auto& r : rs) a.push_back({{"code", r.code}, {"detail", r.detail}});
        return a;
    };
    return {{"status", to_string(v.status)},
            {"matches", v.matches},
            {"reasons", reasons(v.reasons)},
            {"milnor_failures", reasons(v.milnor_failures)}};
}

Json to_json(const FibrationReport& r) {
    return {{"euler", r.euler},
            {"h1", to_json(r.h1)},
            {"b2", r.b2},
            {"boundary_b1", r.boundary_b1},
            {"b2_zero", opt(r.b2_zero)},
            {"b2_plus", opt(r.b2_plus)},
            {"b2_minus", opt(r.b2_minus)},
            {"sigma", opt(r.sigma)},
            {"allowable", r.allowable},
            {"parity", to_string(r.parity)},
            {"warnings", r.warnings}};
}

Json to_json(const CuspReport& r, bool with_words) {
    Json j;
    j["weights"] = r.weights;
    j["r"] = r.r;
    j["m"] = r.m;
    j["non_smoothable"] = r.non_smoothable;
    j["strong_family"] = r.strong_family;
    j["lantern_sites"] = r.lantern_sites;
    j["disjoint_sites"] = r.disjoint_sites;
    j["fillings"] = Json::array();
    for (const auto& f : r.fillings) {
        Json fj{{"substitutions_used", f.substituted.size()},
                {"sites", f.substituted},
                {"length", f.word.length()},
                {"b1", f.b1},
                {"b2", f.b2},
                {"verdict", to_json(f.verdict)}};
        if (with_words) fj["word"] = word_to_json(f.word);
        j["fillings"].push_back(fj);
    }
    return j;
}

Json to_json(const IncidenceMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.n(); ++c) row.push_back(m.at(i, c));
        rows.push_back(row);
    }
    Json kinds = Json::array();
    for (const auto& c : m.columns) kinds.push_back(is_free_column(c) ? "free" : "singular");
    return {{"rows", rows}, {"points", m.n()}, {"point_kinds", kinds}};
}

Json to_json(const OpenBook& b) {
    Json params = Json::object();
    for (const auto& [k, v] : b.params) params[k] = v;
    return {{"page_genus", b.page_genus},
            {"page_boundary", b.page_boundary},
            {"provenance", b.provenance},
            {"params", params},
            {"word", word_to_json(b.word)}};
}

Json analyze_graph(const PlumbingGraph& g, unsigned max_extra, std::uint64_t cap) {
    Json j;
    j["vertices"] = g.size();
    j["edges"] = g.edges().size();
    j["cycle_rank"] = g.cycle_rank();
    j["total_genus"] = g.total_genus();
    const auto q = intersection_matrix(g);
    Json qm = Json::array();
    for (std::size_t i = 0; i < q.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < q.cols(); ++k) row.push_back(q(i, k));
        qm.push_back(row);
    }
    j["intersection_matrix"] = qm;
    j["negative_definite"] = is_negative_definite(g);
    j["bad_vertices"] = bad_vertices(g);
    if (!is_negative_definite(g)) return j;
    j["determinant"] = integer(determinant(q));
    Json zk = Json::array();
    for (const auto& c : canonical_cycle(g)) zk.push_back(rational(c));
    j["Z_K"] = zk;
    j["Z_K_square"] = rational(canonical_square(g));
    j["floor_Z_K"] = floor_cycle(canonical_cycle(g));
    const auto z = fundamental_cycle(g);
    j["Z_min"] = z;
    j["chi_Z_min"] = riemann_roch_chi(z, g);
    j["rational"] = is_rational(g);
    try {
        j["minimally_elliptic"] = is_minimally_elliptic(g, cap);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::cap_exceeded) throw;
        j["minimally_elliptic"] = nullptr;
        j["minimally_elliptic_note"] = e.what();
    }
    j["link_homology"] = to_json(link_homology(g));
    j["minimal_resolution_b2"] = minimal_resolution_b2(g);
    j["sandwiched"] = to_json(is_sandwiched(g, max_extra));
    if (const auto w = cusp_weights(g)) j["cusp_weights"] = *w;
    return j;
}

Json incidence_report(const DecoratedGermData& d, std::uint64_t cap) {
    const auto ms = enumerate_incidence(d, cap);
    Json j;
    j["deltas"] = d.deltas;
    j["ls"] = d.ls;
    j["pairwise"] = d.pairwise ? Json(*d.pairwise) : Json(nullptr);
    j["count"] = ms.size();
    j["matrices"] = Json::array();
    std::set<long long> spread;
    for (const auto& m : ms) {
        auto mj = to_json(m);
        try {
            mj["b2"] = incidence_filling_b2(m);
            spread.insert(mj["b2"].get<long long>());
        } catch (const Error& e) {
            mj["b2"] = nullptr;
            mj["note"] = e.what();
        }
        j["matrices"].push_back(mj);
    }
    j["spread"] = spread;  // matrices with too few points are skipped
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace plumbforge
