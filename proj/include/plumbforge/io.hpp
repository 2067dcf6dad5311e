#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "plumbforge/cusp.hpp"
#include "plumbforge/envelope.hpp"
#include "plumbforge/fibration.hpp"
#include "plumbforge/genus_bounds.hpp"
#include "plumbforge/incidence.hpp"
#include "plumbforge/mcg.hpp"
#include "plumbforge/openbook.hpp"
#include "plumbforge/plumbing.hpp"

namespace plumbforge {

using Json = nlohmann::ordered_json;

// Text:  vertices N / v <i> weight <w> genus <g> / e <i> <j>, '#' starts a comment.
// JSON:  {"vertices":[{"weight":w,"genus":g}],"edges":[[i,j]]}. parse_graph picks by the first character.
PlumbingGraph parse_graph_text(const std::string& text);
PlumbingGraph parse_graph_json(const std::string& text);
PlumbingGraph parse_graph(const std::string& text);
std::string graph_to_text(const PlumbingGraph& g);
Json graph_to_json(const PlumbingGraph& g);

// surface g <g> b <b> / twist <name> exp <+-1> class <c...> / ledger [<relator> <count>] / pencil <n>
// A bare "ledger" line marks an empty but known ledger.
TwistWord parse_word_text(const std::string& text);
TwistWord parse_word_json(const std::string& text);
TwistWord parse_word(const std::string& text);  // by first character, like parse_graph
std::string word_to_text(const TwistWord& w);
Json word_to_json(const TwistWord& w);

FillingInvariants parse_invariants(const std::string& text);
Json to_json(const FillingInvariants& f);

Json to_json(const LinkHomology& h);
Json to_json(const GenusBound& b);
Json to_json(const SandwichResult& s);
Json to_json(const Envelope& e);
Json to_json(const Verdict& v);
Json to_json(const FibrationReport& r);
Json to_json(const CuspReport& r, bool with_words);
Json to_json(const IncidenceMatrix& m);
Json to_json(const OpenBook& b);

// Lattice summary of a negative definite graph.
Json analyze_graph(const PlumbingGraph& g, unsigned max_extra, std::uint64_t cap);

Json incidence_report(const DecoratedGermData& d, std::uint64_t cap);

std::string dump(const Json& j);  // two-space indent, trailing newline

}  // namespace plumbforge
