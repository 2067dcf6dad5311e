#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumbforge/mcg.hpp"
#include "plumbforge/plumbing.hpp"

namespace plumbforge {

using AbelianGroup = LinkHomology;  // free rank + invariant factors >= 2

std::string to_string(const AbelianGroup& a);  // "Z^2 + Z/3", or "0"

enum class Parity { even, odd, unknown };
const char* to_string(Parity p);
Parity parse_parity(const std::string& s);

// chi = (2 - 2g - b) + length
long long fibration_euler(const TwistWord& w);

// H_1(Sigma) modulo the span of the letter classes.
AbelianGroup fibration_h1(const TwistWord& w);

// H_1 of the open book boundary: cokernel of the variation map H_1(Sigma, dSigma) -> H_1(Sigma).
AbelianGroup open_book_h1(const TwistWord& w);

// Ledger signature minus the pencil correction. With fibre square n > 0 the complement of the
// fibre costs 1, and each of the n - b capped sections costs 1 more.
std::optional<long long> fibration_signature(const TwistWord& w, std::optional<long long> fiber_square);

struct Split {
    long long b2_plus = 0;
    long long b2_minus = 0;
    long long b2_zero = 0;
};

Split fibration_split(long long b2, long long b2_zero, long long sigma);

struct FibrationReport {
    long long euler = 0;
    AbelianGroup h1;
    long long b2 = 0;
    long long boundary_b1 = 0;  // from the graph when given, else from the word
    std::optional<long long> b2_zero, b2_plus, b2_minus, sigma;
    bool allowable = true;
    Parity parity = Parity::unknown;
    std::vector<std::string> warnings;
};

// graph: the link this word is claimed to fill. fiber_square overrides the word's pencil entry.
FibrationReport full_report(const TwistWord& w, const PlumbingGraph* graph, std::optional<long long> fiber_square,
                            Parity parity = Parity::unknown);

}  // namespace plumbforge
