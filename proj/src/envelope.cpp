#include "plumbforge/envelope.hpp"

#include "plumbforge/error.hpp"
#include "plumbforge/genus_bounds.hpp"

namespace plumbforge {

namespace {

std::string str(long long v) { return std::to_string(v); }

long long exact_ll(const Rational& q, const char* what) {
    if (q.get_den() != 1)
        throw Error(ErrorCode::inconsistent, std::string(what) + " is not an integer: " + to_string(q));
    return q.get_num().get_si();
}

}  // namespace

void FillingInvariants::normalize() {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::inconsistent, "inconsistent invariants: " + m); };
    if (b1 < 0 || b2_zero < 0) bad("negative Betti number");
    if (b2_plus && b2_minus) {
        if (sigma && *sigma != *b2_plus - *b2_minus) bad("sigma != b2_plus - b2_minus");
        sigma = *b2_plus - *b2_minus;
        const long long total = *b2_plus + *b2_minus + b2_zero;
        if (b2 && *b2 != total) bad("b2 != b2_plus + b2_minus + b2_zero");
        b2 = total;
    } else if (b2 && sigma) {
        const auto s = fibration_split(*b2, b2_zero, *sigma);
        if (b2_plus && *b2_plus != s.b2_plus) bad("b2_plus disagrees with b2 and sigma");
        if (b2_minus && *b2_minus != s.b2_minus) bad("b2_minus disagrees with b2 and sigma");
        b2_plus = s.b2_plus;
        b2_minus = s.b2_minus;
    } else if (b2 && (b2_plus || b2_minus)) {
        const long long rest = *b2 - b2_zero - (b2_plus ? *b2_plus : *b2_minus);
        if (rest < 0) bad("b2 is smaller than its parts");
        if (b2_plus) b2_minus = rest; else b2_plus = rest;
        sigma = *b2_plus - *b2_minus;
    }
    if (b2 && *b2 < b2_zero) bad("b2_zero exceeds b2");
    if ((b2_plus && *b2_plus < 0) || (b2_minus && *b2_minus < 0)) bad("negative Betti number");
}

FillingInvariants from_report(const FibrationReport& r) {
    FillingInvariants f;
    f.b1 = r.h1.free_rank;
    f.b2 = r.b2;
    f.b2_zero = r.b2_zero.value_or(0);
    f.b2_plus = r.b2_plus;
    f.b2_minus = r.b2_minus;
    f.sigma = r.sigma;
    f.parity = r.parity;
    f.normalize();
    return f;
}

FillingInvariants milnor_invariants(const PlumbingGraph& g, long long p_g, bool gorenstein) {
    if (!is_negative_definite(g)) throw Error(ErrorCode::indefinite, "indefinite lattice");
    const long long b1y = link_b1(g);
    if (p_g < 0 || 2 * p_g < b1y)
        throw Error(ErrorCode::invalid_input, "no Milnor fiber with this p_g: 2p_g = " + str(2 * p_g) + " < b1(Y) = " + str(b1y));
    FillingInvariants f;
    f.b1 = 0;
    f.b2_zero = b1y;
    f.b2_plus = 2 * p_g - b1y;
    if (gorenstein) {
        const Rational zk2 = canonical_square(g);
        const long long n = static_cast<long long>(g.size());
        const long long mu = exact_ll(Rational(static_cast<long>(12 * p_g + n - b1y)) + zk2, "mu");
        const long long sigma = exact_ll(Rational(static_cast<long>(-8 * p_g - n)) - zk2, "sigma");
        const long long minus = mu - b1y - *f.b2_plus;
        if (minus < 0 || *f.b2_plus - minus != sigma)
            throw Error(ErrorCode::inconsistent, "Milnor number and signature disagree for p_g = " + str(p_g));
        f.b2 = mu;
        f.b2_minus = minus;
        f.sigma = sigma;
    }
    return f;
}

Envelope envelope(const PlumbingGraph& g, std::uint64_t cap) {
    if (!is_negative_definite(g)) throw Error(ErrorCode::indefinite, "indefinite lattice");
    Envelope e;
    e.vertex_count = static_cast<long long>(g.size());
    const auto link = link_homology(g);
    e.link_b1 = link.free_rank;
    e.zk_square = canonical_square(g);
    const auto bound = best_pg_bound(g, cap);
    e.p_g_max = bound.bound;
    e.p_g_exact = bound.exact;
    for (const auto& w : bound.warnings) e.warnings.push_back(w);
    e.rational = is_rational(g);
    try {
        e.minimally_elliptic = is_minimally_elliptic(g, cap);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::cap_exceeded) throw;
        e.warnings.push_back(std::string("minimal ellipticity undecided: ") + err.what());
    }
    if (e.rational) {
        e.p_g_known = 0;
        bool zk_zero = true;
        for (const auto& c : canonical_cycle(g)) zk_zero = zk_zero && c == 0;
        e.gorenstein_known = zk_zero;  // rational double points
    } else if (e.minimally_elliptic.value_or(false)) {
        e.p_g_known = 1;
        e.gorenstein_known = true;
    }
    e.b2_zero_required = e.link_b1;
    e.b2_plus_max = 2 * e.p_g_max - e.link_b1;

    long long lo = (e.link_b1 + 1) / 2;
    long long hi = e.p_g_max;
    if (e.p_g_known) lo = hi = *e.p_g_known;
    for (long long p = lo; p <= hi; ++p) {
        try {
            const auto f = milnor_invariants(g, p, true);
            e.gorenstein.push_back({p, *f.b2, *f.sigma, *f.b2_plus, *f.b2_minus});
        } catch (const Error&) {
        }
    }
    if (e.gorenstein_known && e.gorenstein.empty())
        e.warnings.push_back("no admissible Gorenstein Milnor data for the known p_g");

    if (e.minimally_elliptic.value_or(false) && e.link_b1 == 0)
        e.lin = LinEnvelope{2, link.torsion.empty()};

    if (g.size() == 1 && g.genus(0) >= 1) {
        const long long gg = g.genus(0), b = -g.weight(0);
        const long long plus_max = 2 * gg * gg - 2 * gg;
        e.chi_bound = ChiBound{6 * plus_max + 10 * gg + 2 * b - 1, -2 * (2 * gg + b - 2)};
    }

    if (const auto a = cusp_weights(g)) {
        long long m = 0;
        for (auto w : *a) m += w - 2;
        const long long r = static_cast<long long>(a->size());
        if (m > r + 9) e.smoothable = false;
    }

    e.minimal_resolution.b1 = 2 * g.total_genus() + g.cycle_rank();
    e.minimal_resolution.b2 = minimal_resolution_b2(g);
    return e;
}

const char* to_string(VerdictStatus s) { return s == VerdictStatus::consistent ? "consistent" : "unexpected"; }

Verdict classify_filling(const Envelope& env, FillingInvariants inv) {
    inv.normalize();
    std::vector<Reason> fail;
    auto add = [&](const char* code, std::string detail) { fail.push_back({code, std::move(detail)}); };

    if (inv.b1 != 0) add("b1_nonzero", "b1=" + str(inv.b1) + " but Milnor fibres have b1=0");
    if (inv.b2_zero != env.b2_zero_required)
        add("b2_zero_mismatch", "b2_zero=" + str(inv.b2_zero) + " but b1(Y)=" + str(env.b2_zero_required));

    if (inv.b2_plus) {
        const long long two_pg = inv.b2_zero + *inv.b2_plus;
        if (two_pg % 2 != 0) {
            add("pg_parity", "2p_g=" + str(two_pg) + " is odd");
        } else {
            if (two_pg > 2 * env.p_g_max)
                add("pg_bound", "2p_g=" + str(two_pg) + " > 2*p_g_max=" + str(2 * env.p_g_max));
        }
        if (env.minimally_elliptic.value_or(false) && *inv.b2_plus != 2 - env.link_b1)
            add("b2_plus_gorenstein",
                "b2_plus=" + str(*inv.b2_plus) + " but p_g=1 forces b2_plus=" + str(2 - env.link_b1));
    }

    if (env.gorenstein_known && env.p_g_known) {
        for (const auto& row : env.gorenstein) {
            if (row.p_g != *env.p_g_known) continue;
            if (inv.b2 && *inv.b2 != row.mu)
                add("milnor_number", "b2=" + str(*inv.b2) + " but mu=" + str(row.mu));
            if (inv.sigma && *inv.sigma != row.sigma)
                add("signature_gorenstein", "sigma=" + str(*inv.sigma) + " but the Milnor fibre has sigma=" + str(row.sigma));
        }
    }

    if (env.lin) {
        if (inv.parity == Parity::odd) add("lin_parity", "odd intersection form; the envelope requires an even form");
        if (env.lin->homology_sphere && inv.b2_minus && inv.b2_plus && *inv.b2_plus > 0 && (*inv.b2_minus - 2) % 8 != 0)
            add("lin_congruence", "b2_minus=" + str(*inv.b2_minus) + " is not 2 mod 8");
    }

    if (env.chi_bound) {
        if (const auto chi = inv.euler(); chi && *chi > env.chi_bound->euler_max)
            add("milnor_chi_bound", "chi=" + str(*chi) + " > " + str(env.chi_bound->euler_max));
        if (const auto chi = inv.euler(); chi && inv.sigma && 2 * *chi + 3 * *inv.sigma < env.chi_bound->stein_min)
            add("stein_c1_bound", "2chi+3sigma=" + str(2 * *chi + 3 * *inv.sigma) + " < " + str(env.chi_bound->stein_min));
    }

    if (!env.smoothable) add("no_smoothing", "cusp with m > r+9 has no Milnor fibre");

    const auto& res = env.minimal_resolution;
    // unknown fields never rule a match out
    const bool res_ok = inv.b1 == res.b1 && (!inv.b2 || *inv.b2 == res.b2) && inv.b2_zero == 0 &&
                        (!inv.b2_plus || *inv.b2_plus == 0) &&
                        (!inv.sigma || (inv.b2 ? *inv.sigma == -*inv.b2 : *inv.sigma <= 0));

    Verdict v;
    v.milnor_failures = fail;
    if (fail.empty()) v.matches.push_back("milnor");
    if (res_ok) v.matches.push_back("minimal_resolution");
    if (v.matches.empty()) {
        v.status = VerdictStatus::unexpected;
        v.reasons = fail;
        std::string d = "minimal resolution has b1=" + str(res.b1) + ", b2=" + str(res.b2) + ", negative definite";
        v.reasons.push_back({"minimal_resolution_mismatch", d});
    }
    return v;
}

Verdict classify_filling(const PlumbingGraph& g, const FillingInvariants& inv, std::uint64_t cap) {
    return classify_filling(envelope(g, cap), inv);
}

}  // namespace plumbforge
