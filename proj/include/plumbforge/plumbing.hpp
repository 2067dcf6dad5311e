#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbforge/exact.hpp"

namespace plumbforge {

inline constexpr std::uint64_t default_cap = 1000000;

struct Vertex {
    long long weight = -1;
    long long genus = 0;
    bool operator==(const Vertex&) const = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

// Weighted multigraph of a resolution. Immutable once built.
class PlumbingGraph {
public:
    PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    long long weight(std::size_t v) const { return vertices_[v].weight; }
    long long genus(std::size_t v) const { return vertices_[v].genus; }
    std::size_t valency(std::size_t v) const { return adjacency_[v].size(); }
    // neighbours listed with multiplicity
    const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_[v]; }
    long long cycle_rank() const;
    long long total_genus() const;

    bool operator==(const PlumbingGraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

using Cycle = std::vector<long long>;
using RationalCycle = std::vector<Rational>;

IntMatrix intersection_matrix(const PlumbingGraph& g);
bool is_negative_definite(const PlumbingGraph& g);

// Z_K . E_v = e_v + 2 - 2 g_v
std::vector<long long> adjunction_vector(const PlumbingGraph& g);

long long pairing(const IntMatrix& q, const Cycle& a, const Cycle& b);
Rational pairing(const IntMatrix& q, const RationalCycle& a, const RationalCycle& b);
RationalCycle to_rational(const Cycle& c);

RationalCycle canonical_cycle(const PlumbingGraph& g);
Rational canonical_square(const PlumbingGraph& g);
Cycle floor_cycle(const RationalCycle& c);
Cycle fundamental_cycle(const PlumbingGraph& g);

Rational riemann_roch_chi(const RationalCycle& d, const PlumbingGraph& g);
// Integral version, no rational solve needed: 2 chi = -l.l + sum l_v K_v.
long long riemann_roch_chi(const Cycle& l, const PlumbingGraph& g);

bool is_rational(const PlumbingGraph& g);

// Box scan below Z_min, run on the minimal model. Throws cap_exceeded when the box is larger than cap.
bool is_minimally_elliptic(const PlumbingGraph& g, std::uint64_t cap = default_cap);
std::uint64_t box_size(const Cycle& upper, std::uint64_t saturate_at);

struct LinkHomology {
    long long free_rank = 0;
    std::vector<Integer> torsion;
    bool operator==(const LinkHomology&) const = default;
};

LinkHomology link_homology(const PlumbingGraph& g);
long long link_b1(const PlumbingGraph& g);

std::vector<std::size_t> bad_vertices(const PlumbingGraph& g);

enum class SandwichStatus { yes, no, unknown };

struct SandwichResult {
    SandwichStatus status = SandwichStatus::unknown;
    std::optional<PlumbingGraph> completion;
    std::vector<std::size_t> attached_at;
    std::string note;
};

// Graph with genus-0 vertices only: blow down (-1) vertices of valency <= 2 until stuck.
// Returns true when the graph disappears.
bool blows_down_to_empty(const PlumbingGraph& g);
SandwichResult is_sandwiched(const PlumbingGraph& g, unsigned max_extra);

// Blow down smooth rational (-1) curves on the lattice. The result may have multi-edges or
// raised genera where curves become tangent or singular. Empty for a smooth point.
std::optional<PlumbingGraph> minimal_model(const PlumbingGraph& g);
long long minimal_resolution_b2(const PlumbingGraph& g);

// Cycle of r >= 2 genus-0 vertices, each of valency 2, weights -a_i.
std::optional<std::vector<long long>> cusp_weights(const PlumbingGraph& g);

const char* to_string(SandwichStatus s);

}  // namespace plumbforge
