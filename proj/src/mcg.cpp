#include "plumbforge/mcg.hpp"

#include <algorithm>
#include <cctype>

#include "plumbforge/error.hpp"

namespace plumbforge {

MarkedSurface::MarkedSurface(int g, int b) : genus(g), boundary(b) {
    if (g < 0 || b < 1) throw Error(ErrorCode::invalid_input, "surface needs genus >= 0 and at least one boundary component");
}

HomologyClass MarkedSurface::alpha(int i) const {
    if (i < 1 || i > genus) throw Error(ErrorCode::invalid_input, "alpha index out of range");
    auto x = zero();
    x[static_cast<std::size_t>(i - 1)] = 1;
    return x;
}

HomologyClass MarkedSurface::beta(int i) const {
    if (i < 1 || i > genus) throw Error(ErrorCode::invalid_input, "beta index out of range");
    auto x = zero();
    x[static_cast<std::size_t>(genus + i - 1)] = 1;
    return x;
}

HomologyClass MarkedSurface::delta(int j) const {
    if (j < 1 || j > boundary) throw Error(ErrorCode::invalid_input, "delta index out of range");
    auto x = zero();
    if (j < boundary) {
        x[static_cast<std::size_t>(2 * genus + j - 1)] = 1;
    } else {
        for (int k = 1; k < boundary; ++k) x[static_cast<std::size_t>(2 * genus + k - 1)] = -1;
    }
    return x;
}

long long MarkedSurface::pairing(const HomologyClass& x, const HomologyClass& y) const {
    if (x.size() != rank() || y.size() != rank()) throw Error(ErrorCode::invalid_input, "class dimension mismatch");
    long long s = 0;
    const auto g = static_cast<std::size_t>(genus);
    for (std::size_t i = 0; i < g; ++i) s += x[i] * y[g + i] - x[g + i] * y[i];
    return s;
}

bool MarkedSurface::essential_after_capping(const HomologyClass& c) const {
    for (std::size_t i = 0; i < static_cast<std::size_t>(2 * genus); ++i)
        if (c[i] != 0) return true;
    return false;
}

HomologyClass add(const HomologyClass& a, const HomologyClass& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::invalid_input, "class dimension mismatch");
    HomologyClass c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

HomologyClass scale(const HomologyClass& a, long long k) {
    HomologyClass c(a);
    for (auto& x : c) x *= k;
    return c;
}

bool is_zero(const HomologyClass& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

HomologyClass transvection(const MarkedSurface& s, const HomologyClass& x, const HomologyClass& c, int exponent) {
    const long long k = s.pairing(x, c) * exponent;
    return add(x, scale(c, k));
}

ZMatrix transvection_matrix(const MarkedSurface& s, const HomologyClass& c, int exponent) {
    const auto n = s.rank();
    ZMatrix t = ZMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        HomologyClass e(n, 0);
        e[j] = 1;
        const auto img = transvection(s, e, c, exponent);
        for (std::size_t i = 0; i < n; ++i) t(i, j) = Integer(static_cast<long>(img[i]));
    }
    return t;
}

HomologyClass cap_boundaries(const HomologyClass& x, const MarkedSurface& from, const MarkedSurface& to) {
    if (from.genus != to.genus || to.boundary > from.boundary)
        throw Error(ErrorCode::invalid_input, "capping needs equal genus and fewer boundary components");
    if (x.size() != from.rank()) throw Error(ErrorCode::invalid_input, "class dimension mismatch");
    const auto g2 = static_cast<std::size_t>(2 * from.genus);
    HomologyClass y(x.begin(), x.begin() + static_cast<long>(g2));
    y.resize(to.rank(), 0);
    // coefficient of delta_j in the redundant form where the last delta has coefficient 0
    auto coeff = [&](int j) { return j < from.boundary ? x[g2 + static_cast<std::size_t>(j - 1)] : 0LL; };
    const long long last = coeff(to.boundary);
    for (int j = 1; j < to.boundary; ++j) y[g2 + static_cast<std::size_t>(j - 1)] = coeff(j) - last;
    return y;
}

Relator Relator::chain(int k) {
    if (k < 1 || k % 2 == 0) throw Error(ErrorCode::invalid_input, "chain relators need odd length");
    return {RelatorKind::chain, k};
}

Relator Relator::daisy(int q) {
    if (q < 1) throw Error(ErrorCode::invalid_input, "daisy relator needs q >= 1");
    return {RelatorKind::daisy, q};
}

Relator Relator::parse(const std::string& token) {
    auto number = [&](std::size_t from) {
        const auto digits = token.substr(from);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw Error(ErrorCode::parse, "bad relator token '" + token + "'");
        return std::stoi(digits);
    };
    if (token == "L") return lantern();
    if (token == "STAR") return star();
    if (token.rfind("DAISY", 0) == 0) return daisy(number(5));
    if (token.rfind("C", 0) == 0) return chain(number(1));
    throw Error(ErrorCode::parse, "unknown relator '" + token + "'");
}

std::string Relator::token() const {
    switch (kind) {
        case RelatorKind::lantern: return "L";
        case RelatorKind::chain: return "C" + std::to_string(param);
        case RelatorKind::star: return "STAR";
        case RelatorKind::daisy: return "DAISY" + std::to_string(param);
    }
    return "?";
}

std::optional<long long> relator_signature(const Relator& r) {
    switch (r.kind) {
        case RelatorKind::lantern: return 1;
        case RelatorKind::chain: {
            const long long h = (r.param - 1) / 2;
            return -2 * h * (h + 2);
        }
        case RelatorKind::daisy: return r.param;
        case RelatorKind::star: return std::nullopt;
    }
    return std::nullopt;
}

void SignatureLedger::add(const Relator& r, long long count) {
    auto& c = entries[r];
    c += count;
    if (c == 0) entries.erase(r);
}

void SignatureLedger::merge(const SignatureLedger& other) {
    for (const auto& [r, c] : other.entries) add(r, c);
}

std::optional<long long> ledger_signature(const SignatureLedger& ledger) {
    long long total = 0;
    for (const auto& [r, c] : ledger.entries) {
        const auto s = relator_signature(r);
        if (!s) return std::nullopt;
        total += *s * c;
    }
    return total;
}

bool TwistWord::positive() const {
    return std::all_of(letters.begin(), letters.end(), [](const Letter& l) { return l.exponent == 1; });
}

bool TwistWord::allowable() const {
    return std::none_of(letters.begin(), letters.end(), [](const Letter& l) { return is_zero(l.cls); });
}

void TwistWord::validate() const {
    for (const auto& l : letters) {
        if (l.cls.size() != surface.rank())
            throw Error(ErrorCode::invalid_input, "letter '" + l.name + "' has a class of the wrong dimension");
        if (l.exponent != 1 && l.exponent != -1)
            throw Error(ErrorCode::invalid_input, "letter '" + l.name + "' has exponent other than +-1");
    }
    if (pencil_square && *pencil_square < 0) throw Error(ErrorCode::invalid_input, "negative pencil fibre square");
}

ZMatrix segment_action(const MarkedSurface& s, const std::vector<Letter>& letters) {
    const auto n = s.rank();
    ZMatrix m = ZMatrix::identity(n);
    std::vector<Integer> mc(n);
    std::vector<long long> wc(n);
    for (const auto& l : letters) {
        // M T_c = M + e (M c)(w)^T with w_j = <e_j, c>
        for (std::size_t j = 0; j < n; ++j) {
            HomologyClass e(n, 0);
            e[j] = 1;
            wc[j] = s.pairing(e, l.cls) * l.exponent;
        }
        for (std::size_t i = 0; i < n; ++i) {
            mc[i] = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (l.cls[k] != 0) mc[i] += m(i, k) * static_cast<long>(l.cls[k]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (mc[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (wc[j] != 0) m(i, j) += mc[i] * static_cast<long>(wc[j]);
        }
    }
    return m;
}

ZMatrix word_action(const TwistWord& w) { return segment_action(w.surface, w.letters); }

ZMatrix segment_variation(const MarkedSurface& s, const std::vector<Letter>& letters) {
    // Var(t_c) f = e f(c) c and Var(phi psi) = phi Var(psi) + Var(phi)
    const auto n = s.rank();
    ZMatrix var(n, n);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        const auto& c = it->cls;
        if (c.size() != n) throw Error(ErrorCode::invalid_input, "class dimension mismatch");
        for (std::size_t j = 0; j < n; ++j) {
            Integer p = 0;
            for (std::size_t i = 0; i < static_cast<std::size_t>(s.genus); ++i)
                p += var(i, j) * static_cast<long>(c[static_cast<std::size_t>(s.genus) + i]) -
                     var(static_cast<std::size_t>(s.genus) + i, j) * static_cast<long>(c[i]);
            p *= it->exponent;
            for (std::size_t i = 0; i < n; ++i)
                var(i, j) += (p + static_cast<long>(it->exponent * c[j])) * static_cast<long>(c[i]);
        }
    }
    return var;
}

ZMatrix word_variation(const TwistWord& w) { return segment_variation(w.surface, w.letters); }

TwistWord hurwitz_move(const TwistWord& w, std::size_t i) {
    if (i < 1 || i >= w.letters.size()) throw Error(ErrorCode::invalid_input, "Hurwitz move index out of range");
    TwistWord out = w;
    const auto& a = w.letters[i - 1];
    const auto& b = w.letters[i];
    Letter moved = b;
    moved.cls = transvection(w.surface, b.cls, a.cls, a.exponent);
    out.letters[i - 1] = moved;
    out.letters[i] = a;
    return out;
}

TwistWord inverse_hurwitz_move(const TwistWord& w, std::size_t i) {
    if (i < 1 || i >= w.letters.size()) throw Error(ErrorCode::invalid_input, "Hurwitz move index out of range");
    TwistWord out = w;
    const auto& x = w.letters[i - 1];
    const auto& y = w.letters[i];
    Letter moved = x;
    moved.cls = transvection(w.surface, x.cls, y.cls, -y.exponent);
    out.letters[i - 1] = y;
    out.letters[i] = moved;
    return out;
}

TwistWord slide_letter(const TwistWord& w, std::size_t from, std::size_t to) {
    if (from >= w.letters.size() || to >= w.letters.size()) throw Error(ErrorCode::invalid_input, "slide index out of range");
    TwistWord out = w;
    auto check = [&](std::size_t a, std::size_t b) {
        if (out.surface.pairing(out.letters[a].cls, out.letters[b].cls) != 0)
            throw Error(ErrorCode::invalid_input, "cannot slide '" + out.letters[a].name + "' past '" +
                                                      out.letters[b].name + "': classes pair nontrivially");
    };
    while (from < to) {
        check(from, from + 1);
        out = inverse_hurwitz_move(out, from + 1);
        ++from;
    }
    while (from > to) {
        check(from - 1, from);
        out = hurwitz_move(out, from);
        --from;
    }
    return out;
}

namespace {

// letter counts of the side removed and the side inserted for a +1 ledger entry
std::pair<std::size_t, std::size_t> forward_shape(const Relator& r, std::size_t site, std::size_t repl) {
    switch (r.kind) {
        case RelatorKind::lantern: return {4, 3};
        case RelatorKind::chain: {
            const auto k = static_cast<std::size_t>(r.param);
            return {2, k * (k + 1)};
        }
        case RelatorKind::daisy: {
            const auto q = static_cast<std::size_t>(r.param);
            return {2 * q + 2, q + 2};
        }
        case RelatorKind::star:
            // boundary multitwist of a torus page against the twelve-twist pencil word
            if (repl == 12) return {site, 12};
            return {12, repl};
    }
    return {0, 0};
}

}  // namespace

Substitution substitute(const TwistWord& w, std::size_t first, std::size_t count, const Relator& relator,
                        const std::vector<Letter>& replacement) {
    if (first < 1 || count == 0 || first - 1 + count > w.letters.size())
        throw Error(ErrorCode::invalid_input, "substitution site out of range");
    for (const auto& l : replacement)
        if (l.cls.size() != w.surface.rank())
            throw Error(ErrorCode::invalid_input, "replacement letter '" + l.name + "' has the wrong dimension");
    const auto [from, to] = forward_shape(relator, count, replacement.size());
    long long direction = 0;
    if (count == from && replacement.size() == to) direction = 1;
    else if (count == to && replacement.size() == from) direction = -1;
    else
        throw Error(ErrorCode::mismatch, "relator mismatch at site " + std::to_string(first) + ": " +
                                             relator.token() + " does not replace " + std::to_string(count) +
                                             " letters by " + std::to_string(replacement.size()));
    const auto begin = w.letters.begin() + static_cast<long>(first - 1);
    const std::vector<Letter> removed(begin, begin + static_cast<long>(count));
    if (!(segment_variation(w.surface, removed) == segment_variation(w.surface, replacement)))
        throw Error(ErrorCode::mismatch, "relator mismatch at site " + std::to_string(first));

    Substitution out;
    out.word = w;
    auto& letters = out.word.letters;
    letters.erase(letters.begin() + static_cast<long>(first - 1), letters.begin() + static_cast<long>(first - 1 + count));
    letters.insert(letters.begin() + static_cast<long>(first - 1), replacement.begin(), replacement.end());
    out.delta.add(relator, direction);
    if (out.word.ledger) out.word.ledger->merge(out.delta);
    return out;
}

}  // namespace plumbforge
