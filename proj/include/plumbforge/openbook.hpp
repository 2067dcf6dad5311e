#pragma once

#include <map>
#include <string>
#include <vector>

#include "plumbforge/mcg.hpp"
#include "plumbforge/plumbing.hpp"

namespace plumbforge {

struct OpenBook {
    int page_genus = 0;
    int page_boundary = 1;
    TwistWord word;
    std::string provenance;  // "gay_mark" or the family name
    std::map<std::string, long long> params;
};

// One boundary curve of the subsurface of a vertex: the letter twisting along it and the
// sign that orients it as part of the subsurface boundary.
struct RegionBoundary {
    std::size_t letter;  // index in the unmodified page word
    int sign;
    std::string name;
};

struct GayMarkPage {
    OpenBook book;
    std::vector<std::vector<RegionBoundary>> regions;  // per vertex, classes sum to zero
    std::vector<std::size_t> edge_letter;             // per edge
};

GayMarkPage gay_mark_page(const PlumbingGraph& g);
OpenBook gay_mark_openbook(const PlumbingGraph& g);

// Lantern on a vertex subsurface with exactly four boundary curves, all still present as
// letters. Letters are found by name, so earlier substitutions elsewhere are fine.
// Gathers the four letters by commuting slides and substitutes.
TwistWord lantern_on_region(const TwistWord& word, const std::vector<RegionBoundary>& region, const std::string& tag,
                            SignatureLedger* delta = nullptr);

// Graphs whose links the built-in families fill.
PlumbingGraph single_vertex_graph(long long genus, long long b);
PlumbingGraph min_elliptic_graph(int n);  // n odd: (-2),(-3) | n x (-2) | (-3),(-3)
PlumbingGraph triangle_graph(int k);      // D_{4,4,4+k}
PlumbingGraph cusp_graph(const std::vector<long long>& weights);

TwistWord family_xgbm(int g, int b, int m);
TwistWord family_min_elliptic(int k);
TwistWord family_triangle(int k);

// Fillings of the built-in minimally elliptic families: 1 plain, 2 star, 3 lantern.
TwistWord min_elliptic_filling(int k, int which);
TwistWord triangle_filling(int k, int which);

// The twelve-twist elliptic pencil word on a torus page with 3 + k boundary components.
std::vector<Letter> pencil_twelve(const MarkedSurface& s);

}  // namespace plumbforge
