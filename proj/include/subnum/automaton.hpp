#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subnum/digit_word.hpp"
#include "subnum/numeration.hpp"
#include "subnum/periodic.hpp"

namespace subnum {

/// Deterministic finite automaton with output for a periodic point:
/// states are the letters plus one start state; start has exactly the two
/// sign edges 0 -> u_0 and 1 -> u_{-1}; a letter state c has an edge on
/// digit i iff i < |eta(c)|, leading to eta(c)[i]. Every letter state
/// outputs itself; acceptance means the path is defined.
class Dfao {
public:
    using State = std::uint32_t;

    State start() const { return start_; }
    std::size_t state_count() const { return next_.size(); }
    std::size_t digit_count() const { return digit_count_; }

    std::optional<State> next(State from, std::uint32_t digit) const;
    bool is_start(State s) const { return s == start_; }
    Letter output(State s) const;  // throws for the start state
    const std::string& state_name(State s) const { return names_[s]; }

private:
    friend Dfao build_dfao(const PeriodicPoint& pp);
    std::vector<std::string> names_;               // letters, then "start"
    std::vector<std::vector<std::int64_t>> next_;  // -1 = undefined
    State start_ = 0;
    std::size_t digit_count_ = 0;
};

Dfao build_dfao(const PeriodicPoint& pp);

/// Runs w from the start state; the output letter of the state reached.
/// Throws when w is empty or falls off the transition table.
Letter eval(const Dfao& d, const DigitWord& w);

/// Runs w from a letter state; the empty word stays put.
Letter eval_from(const Dfao& d, Letter state, const DigitWord& w);

bool accepts(const Dfao& d, const DigitWord& w);
bool accepts_from(const Dfao& d, Letter state, const DigitWord& w);

/// All accepted words of exactly the given length, in lexicographic digit
/// order (depth-first with ascending digits).
std::vector<DigitWord> enumerate_language(const Dfao& d, std::size_t length);
std::vector<DigitWord> enumerate_language_from(const Dfao& d, Letter state, std::size_t length);

/// u_n through the automaton: eval(build_dfao(pp), rep(pp, n)).
Letter letter_at(const PeriodicPoint& pp, const Position& n);

/// DOT rendering: letter states as boxes, start as plaintext, an unlabeled
/// entry arrow into start, one labeled edge per transition. Output is
/// byte-stable for a given automaton.
std::string export_dot(const Dfao& d);

}  // namespace subnum
