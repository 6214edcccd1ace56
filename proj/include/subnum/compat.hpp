#pragma once

#include <cstddef>
#include <vector>

#include "subnum/core.hpp"
#include "subnum/digit_word.hpp"

namespace subnum {

/// Fibonacci numbers with F_0 = 1, F_1 = 2, F_n = F_{n-1} + F_{n-2}.
/// Memoized per instance; use one instance per thread or call site.
class FibSequence {
public:
    const Position& at(std::size_t i);

private:
    std::vector<Position> memo_{Position(1), Position(2)};
};

// Reference complement systems, implemented directly from their value
// maps, independent of the substitution machinery. Binary word indices
// run least-significant last: w = w_{k-1} ... w_0.

/// sum_i w_i 2^i - w_{k-1} 2^k  (leading digit carries weight -2^{k-1}).
Position val_twos_complement(const DigitWord& w);

/// The unique word without prefix 00 or 11 whose two's complement value
/// is n.
DigitWord rep_twos_complement(const Position& n);

/// sum_i w_i F_i - w_{k-1} F_k, the two's complement scheme with
/// Fibonacci weights.
Position val_fib_complement(const DigitWord& w);

/// The unique odd-length word with no factor 11 and no prefix 000 or 101
/// whose Fibonacci complement value is n. Built greedily from Zeckendorf
/// expansions, not via any substitution system.
DigitWord rep_fib_complement(const Position& n);

}  // namespace subnum
