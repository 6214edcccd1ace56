#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace subnum {

/// A finite word over a digit alphabet {0, ..., d-1}. Digits are labels in
/// a word monoid: the only operations are concatenation, indexing and
/// lexicographic comparison, never digit arithmetic.
///
/// Textual form: digits juxtaposed when every digit fits one decimal
/// character ("0010010"), comma-separated otherwise ("1,0,11,3"). parse()
/// accepts both; a separator can also be forced.
class DigitWord {
public:
    DigitWord() = default;
    DigitWord(std::initializer_list<std::uint32_t> digits) : digits_(digits) {}
    explicit DigitWord(std::vector<std::uint32_t> digits) : digits_(std::move(digits)) {}

    static DigitWord parse(std::string_view text);            // auto-detects ','
    static DigitWord parse(std::string_view text, char sep);

    std::string str() const;          // juxtaposed iff all digits <= 9
    std::string str(char sep) const;

    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    std::uint32_t operator[](std::size_t i) const { return digits_[i]; }

    auto begin() const { return digits_.begin(); }
    auto end() const { return digits_.end(); }

    void push_back(std::uint32_t d) { digits_.push_back(d); }
    void pop_back() { digits_.pop_back(); }
    DigitWord subword(std::size_t pos, std::size_t count) const;
    bool starts_with(const DigitWord& prefix) const;

    friend DigitWord operator+(const DigitWord& a, const DigitWord& b);
    bool operator==(const DigitWord&) const = default;

    /// Lexicographic order on equal-or-unequal lengths, a proper prefix
    /// preceding its extensions.
    static std::strong_ordering lex_compare(const DigitWord& a, const DigitWord& b);

private:
    std::vector<std::uint32_t> digits_;
};

}  // namespace subnum
