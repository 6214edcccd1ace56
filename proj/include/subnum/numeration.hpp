#pragma once

#include <compare>

#include "subnum/decompose.hpp"
#include "subnum/digit_word.hpp"
#include "subnum/periodic.hpp"

namespace subnum {

/// A canonical signed representation: nonempty, sign digit 0 (n >= 0) or
/// 1 (n < 0), length 1 mod p, accepted by the system's automaton, and
/// carrying no neutral block right after the sign digit.
using SignedRep = DigitWord;

/// The canonical representation of any n in Z over the periodic point:
/// "0" for 0, "1" for -1, otherwise the sign digit followed by the tail
/// digits at the unique level k = p*l bracketing n.
SignedRep rep(const PeriodicPoint& pp, const Position& n);

/// Inverse of rep, also defined on neutral-padded accepted words: walks
/// the digits from the side's seed letter, summing image lengths of the
/// prefixes stepped over; 1-words are offset by -|eta^k(u_{-1})|.
/// Rejects words the automaton rejects and lengths != 1 mod p.
Position val(const PeriodicPoint& pp, const DigitWord& w);

/// True iff w is the representation of some integer: accepted, length
/// 1 mod p, and no prefix 0.W_min or 1.W_max. False on malformed input.
bool is_canonical(const PeriodicPoint& pp, const DigitWord& w);

/// Total order on sign-digit words matching the integer order: 1-words
/// (negatives) precede 0-words; 0-words compare by radix order
/// (shorter first, then lexicographic), 1-words by reverse-radix order
/// (longer first, then lexicographic).
/// Throws on empty words or a first digit other than 0/1.
std::strong_ordering order_compare(const DigitWord& a, const DigitWord& b);
bool order_less(const DigitWord& a, const DigitWord& b);

}  // namespace subnum
