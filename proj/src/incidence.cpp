#include "plumbforge/incidence.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "plumbforge/error.hpp"

namespace plumbforge {

void DecoratedGermData::validate() const {
    if (ls.empty()) throw Error(ErrorCode::invalid_input, "need at least one branch");
    if (deltas.size() != ls.size()) throw Error(ErrorCode::invalid_input, "deltas and decorations differ in length");
    for (auto l : ls)
        if (l < 1) throw Error(ErrorCode::invalid_input, "decorations must be >= 1");
    for (auto d : deltas)
        if (d < 0) throw Error(ErrorCode::invalid_input, "deltas must be >= 0");
    if (pairwise) {
        if (pairwise->size() != r()) throw Error(ErrorCode::invalid_input, "pairwise matrix must be r x r");
        for (std::size_t i = 0; i < r(); ++i) {
            if ((*pairwise)[i].size() != r()) throw Error(ErrorCode::invalid_input, "pairwise matrix must be r x r");
            for (std::size_t k = 0; k < r(); ++k) {
                if (i == k) continue;
                if ((*pairwise)[i][k] < 0) throw Error(ErrorCode::invalid_input, "intersection numbers must be >= 0");
                if ((*pairwise)[i][k] != (*pairwise)[k][i])
                    throw Error(ErrorCode::invalid_input, "pairwise matrix must be symmetric");
            }
        }
    }
}

IncidenceMatrix canonicalize(IncidenceMatrix m) {
    std::sort(m.columns.begin(), m.columns.end(), std::greater<>());
    return m;
}

bool is_canonical(const IncidenceMatrix& m) {
    return std::is_sorted(m.columns.begin(), m.columns.end(), std::greater<>());
}

bool is_free_column(const std::vector<long long>& col) {
    long long sum = 0;
    for (auto v : col) sum += v;
    return sum == 1;
}

bool satisfies(const IncidenceMatrix& m, const DecoratedGermData& d) {
    if (m.rows != d.r()) return false;
    for (const auto& c : m.columns) {
        if (c.size() != m.rows) return false;
        if (std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; })) return false;
        if (std::any_of(c.begin(), c.end(), [](long long v) { return v < 0; })) return false;
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
        long long sum = 0, dd = 0;
        for (const auto& c : m.columns) {
            sum += c[i];
            dd += c[i] * (c[i] - 1);
        }
        if (sum != d.ls[i] || dd != 2 * d.deltas[i]) return false;
        if (!d.pairwise) continue;
        for (std::size_t k = i + 1; k < m.rows; ++k) {
            long long dot = 0;
            for (const auto& c : m.columns) dot += c[i] * c[k];
            if (dot != (*d.pairwise)[i][k]) return false;
        }
    }
    return true;
}

std::vector<IncidenceMatrix> enumerate_incidence(const DecoratedGermData& d, std::uint64_t cap) {
    d.validate();
    const std::size_t r = d.r();
    std::vector<long long> rest_l = d.ls, rest_d(r);
    for (std::size_t i = 0; i < r; ++i) rest_d[i] = 2 * d.deltas[i];
    std::vector<std::vector<long long>> rest_c(r, std::vector<long long>(r, 0));
    if (d.pairwise) rest_c = *d.pairwise;

    std::vector<IncidenceMatrix> out;
    std::vector<std::vector<long long>> cols;
    std::vector<long long> col(r, 0);

    auto feasible = [&] {
        for (std::size_t i = 0; i < r; ++i) {
            if (rest_l[i] < 0 || rest_d[i] < 0) return false;
            // one more point through branch i carrying all of rest_l gives the most delta
            if (rest_d[i] > rest_l[i] * (rest_l[i] - 1)) return false;
            if (d.pairwise)
                for (std::size_t k = i + 1; k < r; ++k)
                    if (rest_c[i][k] < 0 || rest_c[i][k] > rest_l[i] * rest_l[k]) return false;
        }
        return true;
    };
    auto done = [&] {
        for (std::size_t i = 0; i < r; ++i) {
            if (rest_l[i] != 0 || rest_d[i] != 0) return false;
            if (d.pairwise)
                for (std::size_t k = i + 1; k < r; ++k)
                    if (rest_c[i][k] != 0) return false;
        }
        return true;
    };
    auto apply = [&](const std::vector<long long>& c, long long s) {
        for (std::size_t i = 0; i < r; ++i) {
            rest_l[i] -= s * c[i];
            rest_d[i] -= s * c[i] * (c[i] - 1);
            for (std::size_t k = i + 1; k < r; ++k) rest_c[i][k] -= s * c[i] * c[k];
        }
    };

    // next column: every nonzero vector <= the previous column, fitting the budgets
    std::function<void()> extend;
    std::function<void(std::size_t, bool)> build = [&](std::size_t i, bool below) {
        if (i == r) {
            if (std::all_of(col.begin(), col.end(), [](long long v) { return v == 0; })) return;
            const auto c = col;  // extend() reuses col for the next column
            apply(c, 1);
            if (feasible()) {
                cols.push_back(c);
                extend();
                cols.pop_back();
            }
            apply(c, -1);
            col = c;
            return;
        }
        long long hi = rest_l[i];
        if (!below && !cols.empty()) hi = std::min(hi, cols.back()[i]);
        for (long long v = hi; v >= 0; --v) {
            if (v * (v - 1) > rest_d[i]) continue;
            col[i] = v;
            build(i + 1, below || cols.empty() || v < cols.back()[i]);
        }
        col[i] = 0;
    };
    extend = [&] {
        if (done()) {
            if (out.size() >= cap)
                throw Error(ErrorCode::cap_exceeded,
                            "enumeration cap " + std::to_string(cap) + " exceeded after " + std::to_string(out.size()) + " matrices");
            out.push_back({r, cols});
            return;
        }
        build(0, false);
    };
    if (feasible()) extend();
    std::sort(out.begin(), out.end());
    return out;
}

long long incidence_filling_b2(const IncidenceMatrix& m) {
    if (m.n() < m.rows)
        throw Error(ErrorCode::invalid_input, "decoration too small: " + std::to_string(m.n()) + " points for " +
                                                  std::to_string(m.rows) + " branches");
    return static_cast<long long>(m.n()) - static_cast<long long>(m.rows);
}

std::vector<long long> incidence_spread(const DecoratedGermData& d, std::uint64_t cap) {
    std::set<long long> values;
    for (const auto& m : enumerate_incidence(d, cap)) values.insert(incidence_filling_b2(m));
    return {values.begin(), values.end()};
}

}  // namespace plumbforge
