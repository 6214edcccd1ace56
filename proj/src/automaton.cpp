#include "subnum/automaton.hpp"

namespace subnum {

std::optional<Dfao::State> Dfao::next(State from, std::uint32_t digit) const {
    if (from >= next_.size() || digit >= next_[from].size()) return std::nullopt;
    std::int64_t to = next_[from][digit];
    if (to < 0) return std::nullopt;
    return static_cast<State>(to);
}

Letter Dfao::output(State s) const {
    if (is_start(s)) throw Error("start state has no output");
    return Letter{s};
}

Dfao build_dfao(const PeriodicPoint& pp) {
    const Substitution& s = pp.substitution();
    const std::size_t n = s.alphabet_size();
    Dfao d;
    d.digit_count_ = s.max_image_size();
    d.start_ = static_cast<Dfao::State>(n);
    d.next_.assign(n + 1, std::vector<std::int64_t>(d.digit_count_, -1));
    for (std::uint32_t a = 0; a < n; ++a) {
        d.names_.push_back(s.letter_name(Letter{a}));
        const Word& img = s.image(Letter{a});
        for (std::size_t i = 0; i < img.size(); ++i)
            d.next_[a][i] = img[i].index;
    }
    d.names_.push_back("start");
    // a growing letter forces max |eta(c)| >= 2, so digit 1 always exists
    d.next_[d.start_][0] = pp.seed().right.index;
    d.next_[d.start_][1] = pp.seed().left.index;
    return d;
}

namespace {

Dfao::State run(const Dfao& d, Dfao::State from, const DigitWord& w) {
    Dfao::State cur = from;
    for (std::uint32_t digit : w) {
        auto to = d.next(cur, digit);
        if (!to)
            throw Error("no transition on digit " + std::to_string(digit) + " from state '" +
                        d.state_name(cur) + "'");
        cur = *to;
    }
    return cur;
}

void enumerate_into(const Dfao& d, Dfao::State from, std::size_t length, DigitWord& prefix,
                    std::vector<DigitWord>& out) {
    if (prefix.size() == length) {
        out.push_back(prefix);
        return;
    }
    for (std::uint32_t digit = 0; digit < d.digit_count(); ++digit) {
        auto to = d.next(from, digit);
        if (!to) continue;
        prefix.push_back(digit);
        enumerate_into(d, *to, length, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Letter eval(const Dfao& d, const DigitWord& w) {
    if (w.empty()) throw Error("eval: empty word from start");
    return d.output(run(d, d.start(), w));
}

Letter eval_from(const Dfao& d, Letter state, const DigitWord& w) {
    return d.output(run(d, state.index, w));
}

bool accepts(const Dfao& d, const DigitWord& w) {
    if (w.empty()) return false;
    Dfao::State cur = d.start();
    for (std::uint32_t digit : w) {
        auto to = d.next(cur, digit);
        if (!to) return false;
        cur = *to;
    }
    return true;
}

bool accepts_from(const Dfao& d, Letter state, const DigitWord& w) {
    Dfao::State cur = state.index;
    for (std::uint32_t digit : w) {
        auto to = d.next(cur, digit);
        if (!to) return false;
        cur = *to;
    }
    return true;
}

std::vector<DigitWord> enumerate_language(const Dfao& d, std::size_t length) {
    if (length == 0) throw Error("start state accepts only nonempty words");
    std::vector<DigitWord> out;
    DigitWord prefix;
    enumerate_into(d, d.start(), length, prefix, out);
    return out;
}

std::vector<DigitWord> enumerate_language_from(const Dfao& d, Letter state, std::size_t length) {
    std::vector<DigitWord> out;
    DigitWord prefix;
    enumerate_into(d, state.index, length, prefix, out);
    return out;
}

Letter letter_at(const PeriodicPoint& pp, const Position& n) {
    return eval(build_dfao(pp), rep(pp, n));
}

std::string export_dot(const Dfao& d) {
    std::string out;
    out += "digraph dfao {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=box];\n";
    out += "  \"__entry\" [shape=none, label=\"\"];\n";
    const Dfao::State start = d.start();
    out += "  \"" + d.state_name(start) + "\" [shape=plaintext];\n";
    for (Dfao::State s = 0; s < start; ++s) out += "  \"" + d.state_name(s) + "\";\n";
    out += "  \"__entry\" -> \"" + d.state_name(start) + "\";\n";
    auto edges_of = [&](Dfao::State s) {
        for (std::uint32_t digit = 0; digit < d.digit_count(); ++digit)
            if (auto to = d.next(s, digit))
                out += "  \"" + d.state_name(s) + "\" -> \"" + d.state_name(*to) +
                       "\" [label=\"" + std::to_string(digit) + "\"];\n";
    };
    edges_of(start);
    for (Dfao::State s = 0; s < start; ++s) edges_of(s);
    out += "}\n";
    return out;
}

}  // namespace subnum
