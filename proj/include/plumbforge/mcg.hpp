#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plumbforge/exact.hpp"

namespace plumbforge {

using HomologyClass = std::vector<long long>;

// H_1 of Sigma_g^b in the basis alpha_1..alpha_g, beta_1..beta_g, delta_1..delta_{b-1}.
// delta_b = -(delta_1 + ... + delta_{b-1}).
struct MarkedSurface {
    int genus = 0;
    int boundary = 1;

    MarkedSurface() = default;
    MarkedSurface(int g, int b);

    std::size_t rank() const { return static_cast<std::size_t>(2 * genus + boundary - 1); }
    HomologyClass zero() const { return HomologyClass(rank(), 0); }
    HomologyClass alpha(int i) const;  // 1-based
    HomologyClass beta(int i) const;
    HomologyClass delta(int j) const;  // 1..b
    long long pairing(const HomologyClass& x, const HomologyClass& y) const;
    // nonzero image in H_1 of the closed surface
    bool essential_after_capping(const HomologyClass& c) const;
    bool operator==(const MarkedSurface&) const = default;
};

HomologyClass add(const HomologyClass& a, const HomologyClass& b);
HomologyClass scale(const HomologyClass& a, long long k);
bool is_zero(const HomologyClass& a);

HomologyClass transvection(const MarkedSurface& s, const HomologyClass& x, const HomologyClass& c, int exponent = 1);
ZMatrix transvection_matrix(const MarkedSurface& s, const HomologyClass& c, int exponent = 1);

// Image under capping boundary components to..from-1 of a larger surface of the same genus.
HomologyClass cap_boundaries(const HomologyClass& x, const MarkedSurface& from, const MarkedSurface& to);

struct Letter {
    std::string name;
    int exponent = 1;
    HomologyClass cls;
    bool operator==(const Letter&) const = default;
};

enum class RelatorKind { lantern, chain, star, daisy };

struct Relator {
    RelatorKind kind = RelatorKind::lantern;
    int param = 0;  // chain length k (odd) or daisy lantern count q

    static Relator lantern() { return {RelatorKind::lantern, 0}; }
    static Relator chain(int k);
    static Relator star() { return {RelatorKind::star, 0}; }
    static Relator daisy(int q);
    static Relator parse(const std::string& token);
    std::string token() const;
    auto operator<=>(const Relator&) const = default;
};

std::optional<long long> relator_signature(const Relator& r);

struct SignatureLedger {
    std::map<Relator, long long> entries;  // zero counts are dropped

    void add(const Relator& r, long long count);
    void merge(const SignatureLedger& other);
    bool operator==(const SignatureLedger&) const = default;
};

// Empty when some entry has no known signature.
std::optional<long long> ledger_signature(const SignatureLedger& ledger);

struct TwistWord {
    MarkedSurface surface;
    std::vector<Letter> letters;
    std::optional<SignatureLedger> ledger;
    std::optional<long long> pencil_square;  // fibre square of the closed-up pencil, if known

    std::size_t length() const { return letters.size(); }
    bool positive() const;
    bool allowable() const;
    void validate() const;
    bool operator==(const TwistWord&) const = default;
};

// Letters act right to left: word_action = T_1 T_2 ... T_n.
ZMatrix word_action(const TwistWord& w);
ZMatrix segment_action(const MarkedSurface& s, const std::vector<Letter>& letters);

// Variation H_1(Sigma, dSigma) -> H_1(Sigma), relative classes written as functionals on H_1.
// Finer than the action: it sees boundary twists.
ZMatrix segment_variation(const MarkedSurface& s, const std::vector<Letter>& letters);
ZMatrix word_variation(const TwistWord& w);

// 1-based i: (a, b) at i, i+1 becomes (t_a(b), a).
TwistWord hurwitz_move(const TwistWord& w, std::size_t i);
// 1-based i: (x, y) becomes (y, t_y^{-1}(x)).
TwistWord inverse_hurwitz_move(const TwistWord& w, std::size_t i);
// Slides a letter to a new 0-based position by Hurwitz moves that act as plain swaps.
TwistWord slide_letter(const TwistWord& w, std::size_t from, std::size_t to);

struct Substitution {
    TwistWord word;
    SignatureLedger delta;
};

// first is 1-based; replaces letters first..first+count-1. Both sides must have equal variation.
Substitution substitute(const TwistWord& w, std::size_t first, std::size_t count, const Relator& relator,
                        const std::vector<Letter>& replacement);

}  // namespace plumbforge
