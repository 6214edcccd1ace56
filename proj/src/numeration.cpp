#include "subnum/numeration.hpp"

#include "subnum/multidim.hpp"

namespace subnum {

SignedRep rep(const PeriodicPoint& pp, const Position& n) {
    if (n == 0) return DigitWord{0};
    if (n == -1) return DigitWord{1};
    auto [k, digits] = detail::rep_level_digits(pp, n);
    return DigitWord{n > 0 ? 0u : 1u} + digits;
}

Position val(const PeriodicPoint& pp, const DigitWord& w) {
    if (w.empty()) throw Error("val: empty word");
    const unsigned p = pp.period();
    if ((w.size() - 1) % p != 0)
        throw Error("val: length " + std::to_string(w.size()) + " is not 1 mod " +
                    std::to_string(p));
    if (w[0] > 1) throw Error("val: sign digit must be 0 or 1");
    const Substitution& s = pp.substitution();
    const std::size_t k = w.size() - 1;
    s.length_row(k);

    Letter state = w[0] == 0 ? pp.seed().right : pp.seed().left;
    Position acc = 0;
    for (std::size_t t = 0; t < k; ++t) {
        const std::uint32_t digit = w[t + 1];
        const Word& img = s.image(state);
        if (digit >= img.size())
            throw Error("val: no transition on digit " + std::to_string(digit) +
                        " from state '" + s.letter_name(state) + "'");
        const std::vector<Position>& row = s.length_row(k - 1 - t);
        for (std::uint32_t i = 0; i < digit; ++i) acc += row[img[i].index];
        state = img[digit];
    }
    if (w[0] == 1) acc -= s.image_length(pp.seed().left, k);
    return acc;
}

bool is_canonical(const PeriodicPoint& pp, const DigitWord& w) {
    if (w.empty() || w[0] > 1) return false;
    const unsigned p = pp.period();
    if ((w.size() - 1) % p != 0) return false;
    const Substitution& s = pp.substitution();
    Letter state = w[0] == 0 ? pp.seed().right : pp.seed().left;
    for (std::size_t t = 1; t < w.size(); ++t) {
        const Word& img = s.image(state);
        if (w[t] >= img.size()) return false;
        state = img[w[t]];
    }
    if (w.size() > p) {
        NeutralWords nw = neutral_words(pp);
        const DigitWord& block = w[0] == 0 ? nw.w_min : nw.w_max;
        if (w.subword(1, p) == block) return false;
    }
    return true;
}

std::strong_ordering order_compare(const DigitWord& a, const DigitWord& b) {
    if (a.empty() || b.empty()) throw Error("order: empty word");
    if (a[0] > 1 || b[0] > 1) throw Error("order: sign digit must be 0 or 1");
    if (a[0] != b[0]) return a[0] == 1 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.size() != b.size()) {
        bool shorter_first = a[0] == 0;  // radix for 0-words, reverse-radix for 1-words
        if (a.size() < b.size())
            return shorter_first ? std::strong_ordering::less : std::strong_ordering::greater;
        return shorter_first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return DigitWord::lex_compare(a, b);
}

bool order_less(const DigitWord& a, const DigitWord& b) {
    return order_compare(a, b) == std::strong_ordering::less;
}

}  // namespace subnum
