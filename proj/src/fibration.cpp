#include "plumbforge/fibration.hpp"

#include "plumbforge/error.hpp"

namespace plumbforge {

const char* to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::unknown: return "unknown";
    }
    return "unknown";
}

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    if (s == "unknown") return Parity::unknown;
    throw Error(ErrorCode::parse, "parity must be even, odd or unknown");
}

long long fibration_euler(const TwistWord& w) {
    return 2 - 2LL * w.surface.genus - w.surface.boundary + static_cast<long long>(w.length());
}

namespace {

AbelianGroup cokernel(const ZMatrix& m) {
    const auto snf = smith_normal_form(m);
    AbelianGroup out;
    out.free_rank = static_cast<long long>(m.rows() - snf.rank);
    for (const auto& d : snf.factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

}  // namespace

std::string to_string(const AbelianGroup& a) {
    std::string out = a.free_rank == 0 ? "" : "Z^" + std::to_string(a.free_rank);
    for (const auto& t : a.torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.get_str());
    return out.empty() ? "0" : out;
}

AbelianGroup fibration_h1(const TwistWord& w) {
    w.validate();
    const auto n = w.surface.rank();
    ZMatrix m(n, w.length());
    for (std::size_t j = 0; j < w.length(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = static_cast<long>(w.letters[j].cls[i]);
    return cokernel(m);
}

AbelianGroup open_book_h1(const TwistWord& w) {
    w.validate();
    return cokernel(word_variation(w));
}

std::optional<long long> fibration_signature(const TwistWord& w, std::optional<long long> fiber_square) {
    if (!w.ledger) return std::nullopt;
    const auto base = ledger_signature(*w.ledger);
    if (!base) return std::nullopt;
    const long long n = fiber_square.value_or(0);
    if (n < 0) throw Error(ErrorCode::invalid_input, "negative pencil fibre square");
    if (n == 0) return *base;
    if (n < w.surface.boundary)
        throw Error(ErrorCode::inconsistent, "pencil fibre square " + std::to_string(n) + " is below the page boundary count " +
                                                 std::to_string(w.surface.boundary));
    return *base - 1 - (n - w.surface.boundary);
}

Split fibration_split(long long b2, long long b2_zero, long long sigma) {
    const long long definite = b2 - b2_zero;
    if (definite < 0) throw Error(ErrorCode::inconsistent, "inconsistent inputs: b2_zero exceeds b2");
    if ((definite + sigma) % 2 != 0)
        throw Error(ErrorCode::inconsistent, "inconsistent inputs: b2 - b2_zero + sigma is odd");
    Split s;
    s.b2_zero = b2_zero;
    s.b2_plus = (definite + sigma) / 2;
    s.b2_minus = definite - s.b2_plus;
    if (s.b2_plus < 0 || s.b2_minus < 0)
        throw Error(ErrorCode::inconsistent, "inconsistent inputs: |sigma| exceeds b2 - b2_zero");
    return s;
}

FibrationReport full_report(const TwistWord& w, const PlumbingGraph* graph, std::optional<long long> fiber_square,
                            Parity parity) {
    FibrationReport r;
    r.euler = fibration_euler(w);
    r.h1 = fibration_h1(w);
    r.b2 = r.euler - 1 + r.h1.free_rank;
    r.allowable = w.allowable();
    r.parity = parity;
    const auto boundary = open_book_h1(w);
    r.boundary_b1 = boundary.free_rank;
    if (graph) {
        const auto link = link_homology(*graph);
        r.boundary_b1 = link.free_rank;
        if (!(link == boundary))
            r.warnings.push_back("H_1 of the graph link (" + to_string(link) +
                                 ") differs from H_1 of the open book boundary of the word (" + to_string(boundary) + ")");
    }
    if (r.h1.free_rank > r.boundary_b1)
        r.warnings.push_back("b1 of the filling exceeds b1 of its boundary");
    r.b2_zero = r.boundary_b1 - r.h1.free_rank;
    if (!fiber_square) fiber_square = w.pencil_square;
    r.sigma = fibration_signature(w, fiber_square);
    if (r.sigma) {
        const auto s = fibration_split(r.b2, *r.b2_zero, *r.sigma);
        r.b2_plus = s.b2_plus;
        r.b2_minus = s.b2_minus;
    }
    if (!r.allowable) r.warnings.push_back("some letter class is zero; fibration is not allowable");
    return r;
}

}  // namespace plumbforge
