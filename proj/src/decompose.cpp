#include "subnum/decompose.hpp"

namespace subnum {

namespace {

void check_range(const Substitution& s, unsigned k, Letter x, const Position& n) {
    if (n < 0 || n >= s.image_length(x, k))
        throw Error("position " + n.get_str() + " not in [0, |eta^" + std::to_string(k) +
                    "(" + s.letter_name(x) + ")|)");
}

}  // namespace

DigitWord AdmissibleSequence::digits() const {
    DigitWord out;
    for (const Entry& e : entries) out.push_back(static_cast<std::uint32_t>(e.prefix.size()));
    return out;
}

DigitWord tail(const Substitution& s, unsigned p, Letter x, const Position& n) {
    if (p == 0) throw Error("tail needs p >= 1");
    check_range(s, p, x, n);
    s.length_row(p);  // have all rows up front
    DigitWord out;
    Letter cur = x;
    Position rem = n;
    Position acc;
    for (unsigned level = p; level-- > 0;) {
        const Word& w = s.image(cur);
        const std::vector<Position>& row = s.length_row(level);
        // unique i with |eta^level(w_0..w_{i-1})| <= rem < |eta^level(w_0..w_i)|
        std::uint32_t digit = 0;
        acc = 0;
        for (std::size_t i = 0;; ++i) {
            if (acc + row[w[i].index] > rem) {
                digit = static_cast<std::uint32_t>(i);
                break;
            }
            acc += row[w[i].index];
        }
        out.push_back(digit);
        rem -= acc;
        cur = w[digit];
    }
    return out;
}

AdmissibleSequence decompose(const Substitution& s, unsigned k, Letter x, const Position& n) {
    if (k == 0) throw Error("decompose needs k >= 1");
    check_range(s, k, x, n);
    s.length_row(k);
    AdmissibleSequence seq;
    seq.anchor = x;
    seq.entries.reserve(k);
    Letter cur = x;
    Position rem = n;
    for (unsigned level = k; level-- > 0;) {
        const Word& w = s.image(cur);
        const std::vector<Position>& row = s.length_row(level);
        std::size_t i = 0;
        Position acc = 0;
        while (acc + row[w[i].index] <= rem) {
            acc += row[w[i].index];
            ++i;
        }
        seq.entries.push_back({Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), w[i]});
        rem -= acc;
        cur = w[i];
    }
    return seq;
}

namespace detail {

LevelDigits rep_level_digits(const PeriodicPoint& pp, const Position& n) {
    const Substitution& s = pp.substitution();
    const unsigned p = pp.period();
    if (n >= 1) {
        Letter a = pp.seed().right;
        unsigned k = p;
        while (n >= s.image_length(a, k)) k += p;
        return {k, tail(s, k, a, n)};
    }
    if (n <= -2) {
        Letter b = pp.seed().left;
        unsigned k = p;
        while (n + s.image_length(b, k) < 0) k += p;
        return {k, tail(s, k, b, n + s.image_length(b, k))};
    }
    throw Error("no level digits for n in {-1, 0}");
}

}  // namespace detail

QuotientRemainder quotient_remainder(const PeriodicPoint& pp, const Position& n) {
    if (n == 0 || n == -1)
        throw Error("quotient/remainder undefined for n in {-1, 0}");
    const Substitution& s = pp.substitution();
    const unsigned p = pp.period();
    auto [k, digits] = detail::rep_level_digits(pp, n);

    // Walk the high k-p digits once, summing prefix lengths both at the
    // original levels (for r) and shifted down by p (for q).
    Letter state = n >= 1 ? pp.seed().right : pp.seed().left;
    Position sum_high = 0, sum_shifted = 0;
    for (unsigned t = 0; t < k - p; ++t) {
        const Word& w = s.image(state);
        const std::vector<Position>& row_orig = s.length_row(k - 1 - t);
        const std::vector<Position>& row_shift = s.length_row(k - p - 1 - t);
        for (std::uint32_t i = 0; i < digits[t]; ++i) {
            sum_high += row_orig[w[i].index];
            sum_shifted += row_shift[w[i].index];
        }
        state = w[digits[t]];
    }

    QuotientRemainder qr;
    if (n >= 1) {
        qr.quotient = sum_shifted;
        qr.remainder = n - sum_high;
    } else {
        qr.quotient = sum_shifted - s.image_length(pp.seed().left, k - p);
        qr.remainder = n + s.image_length(pp.seed().left, k) - sum_high;
    }
    return qr;
}

}  // namespace subnum
