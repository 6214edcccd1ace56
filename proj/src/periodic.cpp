#include "subnum/periodic.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

namespace subnum {

namespace {

Letter first_letter_image(const Substitution& s, Letter a) { return s.image(a).front(); }
Letter last_letter_image(const Substitution& s, Letter a) { return s.image(a).back(); }

// Length of the cycle through `a` under the map, or nullopt when `a` is
// not on a cycle (only a tail into one).
template <typename Map>
std::optional<unsigned> cycle_length(const Substitution& s, Letter a, Map step) {
    Letter cur = a;
    for (std::size_t i = 1; i <= s.alphabet_size(); ++i) {
        cur = step(s, cur);
        if (cur == a) return static_cast<unsigned>(i);
    }
    return std::nullopt;
}

std::size_t checked_size(const Position& n, const char* what) {
    if (n < 0 || !n.fits_ulong_p())
        throw Error(std::string("segment ") + what + " does not fit in memory");
    return static_cast<std::size_t>(n.get_ui());
}

}  // namespace

PeriodicPoint::PeriodicPoint(Substitution s, Seed seed, unsigned period)
    : sub_(std::move(s)), seed_(seed), period_(period) {}

PeriodicPoint PeriodicPoint::make(const Substitution& s, std::string_view seed_text) {
    std::size_t bar = seed_text.find('|');
    if (bar == std::string_view::npos)
        throw Error("seed must be 'LEFT|RIGHT', got '" + std::string(seed_text) + "'");
    auto trim = [](std::string_view t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
        return t;
    };
    Letter left = s.letter(trim(seed_text.substr(0, bar)));
    Letter right = s.letter(trim(seed_text.substr(bar + 1)));
    return make(s, Seed{left, right});
}

PeriodicPoint PeriodicPoint::make(const Substitution& s, Seed seed) {
    if (!s.is_growing(seed.left))
        throw Error("seed letter '" + s.letter_name(seed.left) + "' is not growing");
    if (!s.is_growing(seed.right))
        throw Error("seed letter '" + s.letter_name(seed.right) + "' is not growing");
    auto right_cycle = cycle_length(s, seed.right, first_letter_image);
    if (!right_cycle)
        throw Error("'" + s.letter_name(seed.right) +
                    "' is not the first letter of any power image of itself");
    auto left_cycle = cycle_length(s, seed.left, last_letter_image);
    if (!left_cycle)
        throw Error("'" + s.letter_name(seed.left) +
                    "' is not the last letter of any power image of itself");
    return PeriodicPoint(s, seed, std::lcm(*left_cycle, *right_cycle));
}

std::string PeriodicPoint::seed_text() const {
    return sub_.letter_name(seed_.left) + "|" + sub_.letter_name(seed_.right);
}

Word PeriodicPoint::expand_segment(const Position& n_lo, const Position& n_hi) const {
    if (n_lo > n_hi) throw Error("expand_segment: n_lo > n_hi");
    if (n_lo == n_hi) return {};
    std::size_t need_right = n_hi > 0 ? checked_size(n_hi, "end") : 0;
    std::size_t need_left = n_lo < 0 ? checked_size(-n_lo, "start") : 0;

    // eta^p fixes the seed, so right prefixes and left suffixes stabilize.
    Word right{seed_.right};
    while (right.size() < need_right) right = sub_.apply_power(right, period_);
    Word left{seed_.left};
    while (left.size() < need_left) left = sub_.apply_power(left, period_);

    Word out;
    out.reserve(static_cast<std::size_t>(need_left + need_right));
    if (n_hi <= 0) {
        // entirely within the left word: indices -|left| .. -1
        std::size_t end = left.size() - checked_size(-n_hi, "end");
        out.assign(left.end() - static_cast<std::ptrdiff_t>(need_left),
                   left.begin() + static_cast<std::ptrdiff_t>(end));
    } else if (n_lo >= 0) {
        std::size_t begin = checked_size(n_lo, "start");
        out.assign(right.begin() + static_cast<std::ptrdiff_t>(begin),
                   right.begin() + static_cast<std::ptrdiff_t>(need_right));
    } else {
        out.assign(left.end() - static_cast<std::ptrdiff_t>(need_left), left.end());
        out.insert(out.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(need_right));
    }
    return out;
}

std::vector<SeedInfo> enumerate_seeds(const Substitution& s) {
    struct CycleLetter {
        Letter letter;
        unsigned cycle;
    };
    std::vector<CycleLetter> lefts, rights;
    for (std::uint32_t i = 0; i < s.alphabet_size(); ++i) {
        Letter a{i};
        if (!s.is_growing(a)) continue;
        if (auto c = cycle_length(s, a, last_letter_image)) lefts.push_back({a, *c});
        if (auto c = cycle_length(s, a, first_letter_image)) rights.push_back({a, *c});
    }
    auto by_name = [&](const CycleLetter& x, const CycleLetter& y) {
        return s.letter_name(x.letter) < s.letter_name(y.letter);
    };
    std::sort(lefts.begin(), lefts.end(), by_name);
    std::sort(rights.begin(), rights.end(), by_name);

    std::vector<SeedInfo> out;
    for (const CycleLetter& l : lefts)
        for (const CycleLetter& r : rights)
            out.push_back({Seed{l.letter, r.letter}, static_cast<unsigned>(std::lcm(l.cycle, r.cycle))});
    return out;
}

}  // namespace subnum
