#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumbforge/fibration.hpp"
#include "plumbforge/plumbing.hpp"

namespace plumbforge {

// Betti data of a candidate filling. Unknown entries stay empty; normalize() fills what
// the known ones determine and rejects contradictions.
struct FillingInvariants {
    long long b1 = 0;
    long long b2_zero = 0;
    std::optional<long long> b2, b2_plus, b2_minus, sigma;
    Parity parity = Parity::unknown;

    std::optional<long long> euler() const {
        if (!b2) return std::nullopt;
        return 1 - b1 + *b2;
    }
    void normalize();
};

FillingInvariants from_report(const FibrationReport& r);

// Milnor fibre data for a given p_g. With gorenstein, mu and sigma come from the
// Laufer-Durfee formulas and the split is cross-checked.
FillingInvariants milnor_invariants(const PlumbingGraph& g, long long p_g, bool gorenstein);

struct GorensteinRow {
    long long p_g, mu, sigma, b2_plus, b2_minus;
};

struct LinEnvelope {
    long long b2_plus = 2;
    bool homology_sphere = false;  // the b2_minus = 2 mod 8 condition applies only then
};

struct ChiBound {
    long long euler_max;  // Milnor fillings, using p_g <= g^2
    long long stein_min;  // lower bound on 2 chi + 3 sigma for every Stein filling
};

struct MinimalResolution {
    long long b1 = 0;
    long long b2 = 0;
};

struct Envelope {
    long long vertex_count = 0;
    long long link_b1 = 0;
    Rational zk_square;
    long long p_g_max = 0;
    bool p_g_exact = true;
    std::optional<long long> p_g_known;
    long long b2_zero_required = 0;
    long long b2_plus_max = 0;
    bool rational = false;
    std::optional<bool> minimally_elliptic;  // empty when the box scan hit the cap
    bool gorenstein_known = false;
    std::vector<GorensteinRow> gorenstein;
    std::optional<LinEnvelope> lin;
    std::optional<ChiBound> chi_bound;
    bool smoothable = true;
    MinimalResolution minimal_resolution;
    std::vector<std::string> warnings;
};

Envelope envelope(const PlumbingGraph& g, std::uint64_t cap = default_cap);

enum class VerdictStatus { consistent, unexpected };
const char* to_string(VerdictStatus s);

struct Reason {
    std::string code;
    std::string detail;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::consistent;
    std::vector<std::string> matches;  // "milnor", "minimal_resolution"
    std::vector<Reason> reasons;       // empty unless unexpected
    std::vector<Reason> milnor_failures;
};

Verdict classify_filling(const Envelope& env, FillingInvariants inv);
Verdict classify_filling(const PlumbingGraph& g, const FillingInvariants& inv, std::uint64_t cap = default_cap);

}  // namespace plumbforge
