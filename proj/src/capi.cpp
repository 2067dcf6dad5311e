#include "plumbforge.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "plumbforge/error.hpp"
#include "plumbforge/io.hpp"

struct pf_graph {
    plumbforge::PlumbingGraph g;
};

struct pf_word {
    plumbforge::TwistWord w;
};

namespace {

using namespace plumbforge;

thread_local std::string last_error;

char* copy(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

template <typename F>
pf_status guard(F&& f) {
    try {
        f();
        last_error.clear();
        return PF_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<pf_status>(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    }
    return PF_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
    if (!p) throw Error(ErrorCode::invalid_input, std::string(what) + " is NULL");
}

std::vector<long long> params_of(const long long* p, std::size_t n) {
    if (n > 0) need(p, "params");
    return n ? std::vector<long long>(p, p + n) : std::vector<long long>{};
}

void expect_count(const std::vector<long long>& p, std::size_t n, const std::string& name) {
    if (p.size() != n)
        throw Error(ErrorCode::invalid_input, name + " takes " + std::to_string(n) + " parameters");
}

int as_int(long long v) {
    if (v < -1000000 || v > 1000000) throw Error(ErrorCode::invalid_input, "parameter out of range");
    return static_cast<int>(v);
}

}  // namespace

extern "C" {

const char* pf_last_error(void) { return last_error.c_str(); }

const char* pf_status_name(pf_status s) {
    if (s == PF_OK) return "ok";
    return error_code_name(static_cast<ErrorCode>(s));
}

void pf_string_free(char* s) { std::free(s); }

pf_status pf_graph_parse(const char* text, pf_graph** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new pf_graph{parse_graph(text)};
    });
}

pf_status pf_graph_builtin(const char* name, const long long* params, size_t n, pf_graph** out) {
    return guard([&] {
        need(name, "name");
        need(out, "out");
        const std::string nm = name;
        const auto p = params_of(params, n);
        if (nm == "single") {
            expect_count(p, 2, nm);
            *out = new pf_graph{single_vertex_graph(p[0], p[1])};
        } else if (nm == "min-elliptic") {
            expect_count(p, 1, nm);
            *out = new pf_graph{min_elliptic_graph(as_int(p[0]))};
        } else if (nm == "triangle") {
            expect_count(p, 1, nm);
            *out = new pf_graph{triangle_graph(as_int(p[0]))};
        } else if (nm == "cusp") {
            *out = new pf_graph{cusp_graph(p)};
        } else {
            throw Error(ErrorCode::invalid_input, "unknown graph family '" + nm + "'");
        }
    });
}

void pf_graph_free(pf_graph* g) { delete g; }

pf_status pf_graph_to_text(const pf_graph* g, char** out) {
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = copy(graph_to_text(g->g));
    });
}

pf_status pf_graph_to_json(const pf_graph* g, char** out) {
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = copy(dump(graph_to_json(g->g)));
    });
}

pf_status pf_word_parse(const char* text, pf_word** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new pf_word{parse_word(text)};
    });
}

void pf_word_free(pf_word* w) { delete w; }

pf_status pf_word_to_text(const pf_word* w, char** out) {
    return guard([&] {
        need(w, "word");
        need(out, "out");
        *out = copy(word_to_text(w->w));
    });
}

pf_status pf_word_to_json(const pf_word* w, char** out) {
    return guard([&] {
        need(w, "word");
        need(out, "out");
        *out = copy(dump(word_to_json(w->w)));
    });
}

size_t pf_word_length(const pf_word* w) { return w ? w->w.length() : 0; }

pf_status pf_analyze(const pf_graph* g, unsigned max_extra, uint64_t cap, char** json) {
    return guard([&] {
        need(g, "graph");
        need(json, "json");
        *json = copy(dump(analyze_graph(g->g, max_extra, cap)));
    });
}

pf_status pf_pg_bound(const pf_graph* g, uint64_t cap, char** json) {
    return guard([&] {
        need(g, "graph");
        need(json, "json");
        *json = copy(dump(to_json(best_pg_bound(g->g, cap))));
    });
}

pf_status pf_envelope(const pf_graph* g, uint64_t cap, char** json) {
    return guard([&] {
        need(g, "graph");
        need(json, "json");
        *json = copy(dump(to_json(envelope(g->g, cap))));
    });
}

pf_status pf_classify(const pf_graph* g, const char* invariants_json, uint64_t cap, char** json) {
    return guard([&] {
        need(g, "graph");
        need(invariants_json, "invariants");
        need(json, "json");
        const auto inv = parse_invariants(invariants_json);
        Json j;
        j["invariants"] = to_json(inv);
        j["verdict"] = to_json(classify_filling(g->g, inv, cap));
        *json = copy(dump(j));
    });
}

pf_status pf_openbook(const pf_graph* g, pf_word** word, char** json) {
    return guard([&] {
        need(g, "graph");
        const auto book = gay_mark_openbook(g->g);
        if (json) *json = copy(dump(to_json(book)));
        if (word) *word = new pf_word{book.word};
    });
}

pf_status pf_family(const char* name, const long long* params, size_t n, int filling, pf_word** out) {
    return guard([&] {
        need(name, "name");
        need(out, "out");
        const std::string nm = name;
        const auto p = params_of(params, n);
        if (nm == "xgbm") {
            expect_count(p, 3, nm);
            *out = new pf_word{family_xgbm(as_int(p[0]), as_int(p[1]), as_int(p[2]))};
        } else if (nm == "min-elliptic") {
            expect_count(p, 1, nm);
            *out = new pf_word{min_elliptic_filling(as_int(p[0]), filling)};
        } else if (nm == "triangle") {
            expect_count(p, 1, nm);
            *out = new pf_word{triangle_filling(as_int(p[0]), filling)};
        } else {
            throw Error(ErrorCode::invalid_input, "unknown family '" + nm + "'");
        }
    });
}

pf_status pf_fibration(const pf_word* w, const pf_graph* g, pf_parity parity, int has_fiber_square,
                       long long fiber_square, uint64_t cap, char** json) {
    return guard([&] {
        need(w, "word");
        need(json, "json");
        const Parity par = parity == PF_PARITY_EVEN ? Parity::even : parity == PF_PARITY_ODD ? Parity::odd : Parity::unknown;
        std::optional<long long> fs;
        if (has_fiber_square) fs = fiber_square;
        const auto report = full_report(w->w, g ? &g->g : nullptr, fs, par);
        Json j;
        j["report"] = to_json(report);
        if (g) {
            const auto inv = from_report(report);
            j["invariants"] = to_json(inv);
            j["verdict"] = to_json(classify_filling(g->g, inv, cap));
        }
        *json = copy(dump(j));
    });
}

pf_status pf_cusp(const long long* weights, size_t r, int with_words, uint64_t cap, char** json) {
    return guard([&] {
        need(json, "json");
        *json = copy(dump(to_json(cusp_report(params_of(weights, r), cap), with_words != 0)));
    });
}

pf_status pf_incidence(const long long* deltas, const long long* ls, size_t r, const long long* pairwise, uint64_t cap,
                       char** json) {
    return guard([&] {
        need(json, "json");
        DecoratedGermData d;
        d.deltas = params_of(deltas, r);
        d.ls = params_of(ls, r);
        if (pairwise) {
            std::vector<std::vector<long long>> m(r);
            for (std::size_t i = 0; i < r; ++i) m[i].assign(pairwise + i * r, pairwise + (i + 1) * r);
            d.pairwise = m;
        }
        *json = copy(dump(incidence_report(d, cap)));
    });
}

}  // extern "C"
