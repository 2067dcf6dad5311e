// Command line front end. Talks to the library only through plumbforge.h.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plumbforge.h"

namespace {

using Json = nlohmann::ordered_json;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Failed {
    pf_status status;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Usage("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check(pf_status s) {
    if (s != PF_OK) throw Failed{s};
}

// Owns a string handed out by the library.
std::string take(char* s) {
    std::string out = s ? s : "";
    pf_string_free(s);
    return out;
}

struct GraphHandle {
    pf_graph* g = nullptr;
    explicit GraphHandle(const std::string& text) { check(pf_graph_parse(text.c_str(), &g)); }
    GraphHandle() = default;
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    ~GraphHandle() { pf_graph_free(g); }
};

struct WordHandle {
    pf_word* w = nullptr;
    WordHandle() = default;
    WordHandle(const WordHandle&) = delete;
    WordHandle& operator=(const WordHandle&) = delete;
    ~WordHandle() { pf_word_free(w); }
};

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    auto scalar_array = [](const Json& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (j.is_array() && !scalar_array(j)) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.push_back({prefix, j.is_string() ? j.get<std::string>() : j.dump()});
    }
}

void emit(const std::string& json_text, bool as_json) {
    if (as_json) {
        std::cout << json_text;
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(Json::parse(json_text), "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

std::vector<long long> parse_list(const std::string& s, char sep = ',') {
    std::vector<long long> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, sep);) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw Usage("bad integer '" + tok + "'");
        } catch (const std::logic_error&) {
            throw Usage("bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw Usage("empty list");
    return out;
}

uint64_t default_cap() {
    if (const char* env = std::getenv("PLUMBFORGE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw Usage("PLUMBFORGE_CAP must be a positive integer");
        }
    }
    return 1000000;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plumbforge: invariants of singularity links and their fillings"};
    app.require_subcommand(1);

    bool as_json = false;
    uint64_t cap = 0;
    unsigned max_extra = 4;
    std::string parity = "unknown";
    long long fiber_square = 0;
    std::string graph_path, file, second;
    std::string weights, deltas, ls, pairwise, emit_dir, graph_out;
    long long g = 0, b = 0, m = 0, k = 0;
    int filling = 1;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "JSON output");
        sub->add_option("--cap", cap, "box and enumeration cap");
    };

    auto* analyze = app.add_subcommand("analyze", "lattice invariants of a graph");
    analyze->add_option("graph", file, "graph file, '-' for stdin");
    analyze->add_option("--max-extra", max_extra, "(-1)-leaves tried by the sandwiched test");
    common(analyze);

    auto* pg = app.add_subcommand("pg-bound", "lattice path bound on p_g");
    pg->add_option("graph", file, "graph file");
    common(pg);

    auto* env = app.add_subcommand("envelope", "constraints on Milnor fibres");
    env->add_option("graph", file, "graph file");
    common(env);

    auto* cls = app.add_subcommand("classify", "check filling invariants against the envelope");
    cls->add_option("graph", file, "graph file")->required();
    cls->add_option("invariants", second, "invariants JSON, '-' for stdin");
    common(cls);

    auto* ob = app.add_subcommand("openbook", "Gay-Mark open book of a good graph");
    ob->add_option("graph", file, "graph file");
    common(ob);

    auto* fib = app.add_subcommand("fibration", "Lefschetz fibration invariants of a word");
    fib->add_option("word", file, "word file, '-' for stdin");
    fib->add_option("--graph", graph_path, "graph of the boundary link");
    fib->add_option("--parity", parity, "intersection form parity")->check(CLI::IsMember({"even", "odd", "unknown"}));
    auto* fs_opt = fib->add_option("--fiber-square", fiber_square, "square of the pencil fibre");
    common(fib);

    auto* fam = app.add_subcommand("family", "built-in monodromy words");
    std::string family_name;
    fam->add_option("name", family_name, "xgbm, min-elliptic or triangle")
        ->required()
        ->check(CLI::IsMember({"xgbm", "min-elliptic", "triangle"}));
    fam->add_option("--g", g, "genus (xgbm)");
    fam->add_option("--b", b, "boundary components (xgbm)");
    fam->add_option("--m", m, "m (xgbm)");
    fam->add_option("--k", k, "k (min-elliptic, triangle)");
    fam->add_option("--filling", filling, "1 plain, 2 star, 3 lantern")->check(CLI::Range(1, 3));
    fam->add_option("--graph-out", graph_out, "also write the graph of the filled link (JSON if the name ends in .json)");
    common(fam);

    auto* cusp = app.add_subcommand("cusp", "lantern fillings of a cusp");
    cusp->add_option("--weights", weights, "a_1,...,a_r")->required();
    cusp->add_option("--emit-words", emit_dir, "write each filling's word into this directory");
    common(cusp);

    auto* inc = app.add_subcommand("incidence", "incidence matrices of a decorated germ");
    inc->add_option("--deltas", deltas, "delta per branch")->required();
    inc->add_option("--ls", ls, "decoration per branch")->required();
    inc->add_option("--pairwise", pairwise, "r x r intersections, rows split by ';'");
    common(inc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cap == 0) cap = default_cap();
        if (analyze->parsed()) {
            GraphHandle gh(read_input(file));
            char* out = nullptr;
            check(pf_analyze(gh.g, max_extra, cap, &out));
            emit(take(out), as_json);
        } else if (pg->parsed()) {
            GraphHandle gh(read_input(file));
            char* out = nullptr;
            check(pf_pg_bound(gh.g, cap, &out));
            emit(take(out), as_json);
        } else if (env->parsed()) {
            GraphHandle gh(read_input(file));
            char* out = nullptr;
            check(pf_envelope(gh.g, cap, &out));
            emit(take(out), as_json);
        } else if (cls->parsed()) {
            if (file == "-" && (second.empty() || second == "-")) throw Usage("only one input can come from stdin");
            GraphHandle gh(read_input(file));
            const auto inv = read_input(second);
            char* out = nullptr;
            check(pf_classify(gh.g, inv.c_str(), cap, &out));
            emit(take(out), as_json);
        } else if (ob->parsed()) {
            GraphHandle gh(read_input(file));
            WordHandle wh;
            char* out = nullptr;
            check(pf_openbook(gh.g, &wh.w, &out));
            if (as_json) {
                std::cout << take(out);
            } else {
                take(out);
                char* text = nullptr;
                check(pf_word_to_text(wh.w, &text));
                std::cout << take(text);
            }
        } else if (fib->parsed()) {
            const auto text = read_input(file);
            WordHandle wh;
            check(pf_word_parse(text.c_str(), &wh.w));
            GraphHandle gh;
            if (!graph_path.empty()) {
                if (graph_path == "-" && (file.empty() || file == "-")) throw Usage("only one input can come from stdin");
                check(pf_graph_parse(read_input(graph_path).c_str(), &gh.g));
            }
            const pf_parity par = parity == "even" ? PF_PARITY_EVEN : parity == "odd" ? PF_PARITY_ODD : PF_PARITY_UNKNOWN;
            char* out = nullptr;
            check(pf_fibration(wh.w, gh.g, par, fs_opt->count() > 0, fiber_square, cap, &out));
            emit(take(out), as_json);
        } else if (fam->parsed()) {
            WordHandle wh;
            std::vector<long long> params;
            std::vector<long long> graph_params;
            std::string graph_family;
            if (family_name == "xgbm") {
                params = {g, b, m};
                graph_family = "single";
                graph_params = {g, b};
            } else {
                params = {k};
                graph_family = family_name;
                graph_params = {family_name == "min-elliptic" ? 2 * k + 1 : k};
            }
            check(pf_family(family_name.c_str(), params.data(), params.size(), filling, &wh.w));
            char* out = nullptr;
            check(as_json ? pf_word_to_json(wh.w, &out) : pf_word_to_text(wh.w, &out));
            const auto word = take(out);
            if (!graph_out.empty()) {
                GraphHandle gh;
                check(pf_graph_builtin(graph_family.c_str(), graph_params.data(), graph_params.size(), &gh.g));
                char* gt = nullptr;
                const bool json_out = graph_out.size() > 5 && graph_out.compare(graph_out.size() - 5, 5, ".json") == 0;
                check(json_out ? pf_graph_to_json(gh.g, &gt) : pf_graph_to_text(gh.g, &gt));
                std::ofstream o(graph_out);
                if (!o) throw Usage("cannot write '" + graph_out + "'");
                o << take(gt);
            }
            std::cout << word;
        } else if (cusp->parsed()) {
            const auto w = parse_list(weights);
            char* out = nullptr;
            check(pf_cusp(w.data(), w.size(), emit_dir.empty() ? 0 : 1, cap, &out));
            auto j = Json::parse(take(out));
            if (!emit_dir.empty()) {
                std::filesystem::create_directories(emit_dir);
                for (std::size_t i = 0; i < j["fillings"].size(); ++i) {
                    auto& f = j["fillings"][i];
                    WordHandle wh;
                    check(pf_word_parse(f["word"].dump().c_str(), &wh.w));
                    char* text = nullptr;
                    check(pf_word_to_text(wh.w, &text));
                    const auto path = std::filesystem::path(emit_dir) / ("filling_" + std::to_string(i) + ".word");
                    std::ofstream o(path);
                    if (!o) throw Usage("cannot write '" + path.string() + "'");
                    o << take(text);
                    f.erase("word");
                    f["word_file"] = path.string();
                }
            }
            emit(j.dump(2) + "\n", as_json);
        } else if (inc->parsed()) {
            const auto d = parse_list(deltas), l = parse_list(ls);
            if (d.size() != l.size()) throw Usage("--deltas and --ls differ in length");
            std::vector<long long> pw;
            if (!pairwise.empty()) {
                std::stringstream ss(pairwise);
                for (std::string row; std::getline(ss, row, ';');) {
                    const auto r = parse_list(row);
                    if (r.size() != d.size()) throw Usage("--pairwise rows must have r entries");
                    pw.insert(pw.end(), r.begin(), r.end());
                }
                if (pw.size() != d.size() * d.size()) throw Usage("--pairwise must have r rows");
            }
            char* out = nullptr;
            check(pf_incidence(d.data(), l.data(), d.size(), pw.empty() ? nullptr : pw.data(), cap, &out));
            emit(take(out), as_json);
        }
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Failed& f) {
        Json err{{"error", pf_status_name(f.status)}, {"code", static_cast<int>(f.status)}, {"message", pf_last_error()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err{{"error", "internal"}, {"code", 99}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
