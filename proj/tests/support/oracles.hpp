#pragma once

// Slow, independent re-derivations used to cross-check the library.

#include <optional>
#include <random>
#include <vector>

#include "plumbforge/incidence.hpp"
#include "plumbforge/mcg.hpp"
#include "plumbforge/plumbing.hpp"

namespace oracle {

using plumbforge::Cycle;
using plumbforge::IntMatrix;
using plumbforge::Integer;
using plumbforge::PlumbingGraph;
using plumbforge::Rational;

// Laplace expansion along the first row.
Integer cofactor_det(const IntMatrix& m);
// All leading principal minors alternate in sign starting negative.
bool negative_definite_by_minors(const IntMatrix& m);

// Smallest nonzero effective cycle in the box [0, upper] with Z.E_v <= 0 for all v,
// found by scanning the whole box. Empty if none or if the box exceeds max_points.
std::optional<Cycle> brute_zmin(const PlumbingGraph& g, const Cycle& upper, std::uint64_t max_points);

// 2 chi(l) from the raw formula -l.l - l.K with K.E_v = -e_v - 2 + 2 g_v.
long long two_chi(const PlumbingGraph& g, const Cycle& l);

// sum_{i=0}^{floor((2g-2)/b)} (g - ceil(i b / 2))
long long single_vertex_pg_sum(long long g, long long b);

// Every matrix satisfying the constraints, by listing column multisets of each size
// directly. Only for tiny inputs.
std::vector<plumbforge::IncidenceMatrix> brute_incidence(const plumbforge::DecoratedGermData& d);

// x + e <x,c> c with the pairing spelled out coordinate by coordinate.
plumbforge::HomologyClass transvect(int genus, const plumbforge::HomologyClass& x, const plumbforge::HomologyClass& c,
                                    int e);

// Random negative definite graphs: trees (and optionally one extra edge) with weights
// at most -(valency + 1), genus up to max_genus.
PlumbingGraph random_definite_graph(std::mt19937_64& rng, std::size_t max_vertices, long long max_genus,
                                    bool allow_cycle);
// Same, but every vertex is good (valency <= -weight) so the Gay-Mark page exists.
PlumbingGraph random_good_graph(std::mt19937_64& rng, std::size_t max_vertices, long long max_genus, bool allow_cycle);

plumbforge::TwistWord random_word(std::mt19937_64& rng, int max_genus, int max_boundary, std::size_t max_len);

}  // namespace oracle
