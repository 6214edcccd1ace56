#pragma once

#include <vector>

#include "subnum/core.hpp"
#include "subnum/digit_word.hpp"
#include "subnum/periodic.hpp"

namespace subnum {

/// An x-admissible sequence (m_i, a_i) for i = k-1 down to 0: each
/// m_i a_i is a prefix of eta(a_{i+1}) (reading a_k as the anchor x).
/// It encodes a root-to-node path in the tree of iterated images of x;
/// the digit at level i is |m_i|.
struct AdmissibleSequence {
    struct Entry {
        Word prefix;    // m_i
        Letter letter;  // a_i
    };
    Letter anchor;               // x
    std::vector<Entry> entries;  // entries[0] is level k-1, entries[k-1] is level 0

    std::size_t levels() const { return entries.size(); }
    Letter final_letter() const { return entries.back().letter; }  // a_0
    DigitWord digits() const;                                      // |m_{k-1}| ... |m_0|
};

/// Digit word of length p encoding position n below |eta^p(x)|: the unique
/// x-admissible sequence with sum_j |eta^j(m_j)| = n, read top-down.
/// Computed by descending levels p-1 .. 0 on cached length rows; no word
/// beyond single letter images is materialized.
DigitWord tail(const Substitution& s, unsigned p, Letter x, const Position& n);

/// Full decomposition behind tail(): prefixes and letters retained.
/// The concatenation eta^{k-1}(m_{k-1}) ... eta^0(m_0) is the length-n
/// prefix of eta^k(x), and a_0 = eta^k(x)[n].
AdmissibleSequence decompose(const Substitution& s, unsigned k, Letter x, const Position& n);

struct QuotientRemainder {
    Position quotient;
    Position remainder;
};

/// Strips the low p digits of n's decomposition: |q| < |n|, the remainder
/// satisfies 0 <= r < |eta^p(u_q)|, and rep(n) = rep(q) followed by
/// tail(s, p, u_q, r). Rejects n in {-1, 0}.
QuotientRemainder quotient_remainder(const PeriodicPoint& pp, const Position& n);

namespace detail {

// Level k and the raw digit block of rep(pp, n) for n outside {-1, 0}:
// digits = tail at level k from the seed letter on n's side.
struct LevelDigits {
    unsigned level;
    DigitWord digits;
};
LevelDigits rep_level_digits(const PeriodicPoint& pp, const Position& n);

}  // namespace detail

}  // namespace subnum
