#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "subnum/error.hpp"

namespace subnum {

// Signed arbitrary-precision integer used for positions n in Z and for the
// image lengths |eta^k(a)|, which grow exponentially in k.
using Position = mpz_class;

// A letter interned in its substitution's alphabet. Comparison is identity
// of the interned slot; letters are only meaningful together with the
// Substitution that produced them.
struct Letter {
    std::uint32_t index{0};
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// A substitution eta: every letter maps to a nonempty word over the
/// alphabet and at least one letter is growing (|eta^k(a)| -> infinity).
///
/// Values are immutable after parse() and cheap to copy (shared internals).
/// The per-iterate length table |eta^k(.)| is cached lazily; the cache is
/// extend-only behind a mutex, so concurrent readers are fine.
class Substitution {
public:
    /// Parses config text, one rule per line:
    ///
    ///     # Fibonacci
    ///     a -> ab
    ///     b -> a
    ///
    /// Letters are tokens without whitespace or any of '|', '-', '>', ','.
    /// Image letters are whitespace-separated; a run of single-character
    /// letters may be juxtaposed ("ab" above). '#' starts a comment.
    ///
    /// Throws Error on: malformed rule, duplicate rule, empty image,
    /// unknown letter in an image, or no growing letter.
    static Substitution parse(std::string_view config_text);

    std::size_t alphabet_size() const;
    const std::string& letter_name(Letter a) const;
    std::optional<Letter> find_letter(std::string_view name) const;
    Letter letter(std::string_view name) const;  // throws if unknown

    const Word& image(Letter a) const;

    /// Size of the largest image; the digit alphabet is {0, ..., max-1}.
    std::size_t max_image_size() const;

    /// Applies eta to a word (concatenation of letter images).
    Word apply(const Word& w) const;

    /// Materializes eta^k(w). Test oracle and segment expansion; queries
    /// that only need lengths should use image_length instead.
    Word apply_power(const Word& w, unsigned k) const;

    /// |eta^k(a)| computed by iterating per-letter length vectors, never
    /// materializing the word itself.
    const Position& image_length(Letter a, std::size_t k) const;

    /// Per-letter lengths |eta^k(.)| as one row, indexed by Letter::index.
    const std::vector<Position>& length_row(std::size_t k) const;

    bool is_growing(Letter a) const;
    std::vector<Letter> growing_letters() const;  // in alphabet order

    /// Renders a word: juxtaposed when every letter name is a single
    /// character, otherwise space-separated.
    std::string word_string(const Word& w) const;

    /// Structural equality: same letter names in the same order with the
    /// same images.
    bool operator==(const Substitution& other) const;

private:
    struct Data;
    explicit Substitution(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

}  // namespace subnum
