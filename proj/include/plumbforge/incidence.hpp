#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plumbforge/plumbing.hpp"

namespace plumbforge {

struct DecoratedGermData {
    std::vector<long long> deltas;  // delta of each branch
    std::vector<long long> ls;      // decorations, >= 1
    // r x r, off-diagonal entries C_i . C_k; diagonal ignored
    std::optional<std::vector<std::vector<long long>>> pairwise;

    std::size_t r() const { return ls.size(); }
    void validate() const;
};

// Columns are the points of the picture deformation; each column has one entry per branch.
struct IncidenceMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<long long>> columns;

    std::size_t n() const { return columns.size(); }
    long long at(std::size_t i, std::size_t j) const { return columns[j][i]; }
    bool operator==(const IncidenceMatrix&) const = default;
    bool operator<(const IncidenceMatrix& o) const { return columns < o.columns; }
};

// Columns sorted lexicographically nonincreasing.
IncidenceMatrix canonicalize(IncidenceMatrix m);
bool is_canonical(const IncidenceMatrix& m);
bool satisfies(const IncidenceMatrix& m, const DecoratedGermData& d);

// A free point has a single entry 1; every other point is singular.
bool is_free_column(const std::vector<long long>& col);

// All canonical matrices, sorted. Throws cap_exceeded once more than cap matrices are found.
std::vector<IncidenceMatrix> enumerate_incidence(const DecoratedGermData& d, std::uint64_t cap = default_cap);

long long incidence_filling_b2(const IncidenceMatrix& m);
std::vector<long long> incidence_spread(const DecoratedGermData& d, std::uint64_t cap = default_cap);

}  // namespace plumbforge
