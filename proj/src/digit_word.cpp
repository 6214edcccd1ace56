#include "subnum/digit_word.hpp"

#include <algorithm>
#include <cctype>

#include "subnum/error.hpp"

namespace subnum {

namespace {

std::uint32_t parse_digit_token(std::string_view tok) {
    if (tok.empty()) throw Error("empty digit in word");
    std::uint64_t v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error("invalid digit '" + std::string(tok) + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 0xffffffffull) throw Error("digit out of range: " + std::string(tok));
    }
    return static_cast<std::uint32_t>(v);
}

}  // namespace

DigitWord DigitWord::parse(std::string_view text) {
    return parse(text, text.find(',') != std::string_view::npos ? ',' : '\0');
}

DigitWord DigitWord::parse(std::string_view text, char sep) {
    std::vector<std::uint32_t> digits;
    if (text.empty()) return DigitWord();
    if (sep == '\0') {
        digits.reserve(text.size());
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(std::string("invalid digit character '") + c + "'");
            digits.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(sep, pos);
            if (next == std::string_view::npos) next = text.size();
            digits.push_back(parse_digit_token(text.substr(pos, next - pos)));
            pos = next + 1;
            if (next == text.size()) break;
        }
    }
    return DigitWord(std::move(digits));
}

std::string DigitWord::str() const {
    bool small = std::all_of(digits_.begin(), digits_.end(),
                             [](std::uint32_t d) { return d <= 9; });
    return small ? str('\0') : str(',');
}

std::string DigitWord::str(char sep) const {
    std::string out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (sep != '\0' && i > 0) out += sep;
        out += std::to_string(digits_[i]);
    }
    return out;
}

DigitWord DigitWord::subword(std::size_t pos, std::size_t count) const {
    if (pos > digits_.size()) throw Error("subword position out of range");
    count = std::min(count, digits_.size() - pos);
    return DigitWord(std::vector<std::uint32_t>(digits_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                digits_.begin() + static_cast<std::ptrdiff_t>(pos + count)));
}

bool DigitWord::starts_with(const DigitWord& prefix) const {
    if (prefix.size() > size()) return false;
    return std::equal(prefix.begin(), prefix.end(), digits_.begin());
}

DigitWord operator+(const DigitWord& a, const DigitWord& b) {
    std::vector<std::uint32_t> digits;
    digits.reserve(a.size() + b.size());
    digits.insert(digits.end(), a.begin(), a.end());
    digits.insert(digits.end(), b.begin(), b.end());
    return DigitWord(std::move(digits));
}

std::strong_ordering DigitWord::lex_compare(const DigitWord& a, const DigitWord& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace subnum
