#pragma once

#include <string>
#include <vector>

#include "subnum/digit_word.hpp"
#include "subnum/periodic.hpp"

namespace subnum {

/// The two neutral digit blocks of length p: inserting copies of w_min
/// (resp. w_max) right after the sign digit 0 (resp. 1) changes neither
/// the automaton's output nor the value of an accepted word.
struct NeutralWords {
    DigitWord w_min;  // tail(s, p, u_0, 0) = 0^p
    DigitWord w_max;  // tail(s, p, u_{-1}, |eta^p(u_{-1})| - 1)
};

NeutralWords neutral_words(const PeriodicPoint& pp);

/// Pads a sign-digit word to length `target` (target >= |w| and target
/// = 1 mod p) by inserting (target - |w|)/p neutral blocks after the sign
/// digit. Value-preserving.
DigitWord pad(const PeriodicPoint& pp, const DigitWord& w, std::size_t target);

/// Representation of a vector in Z^d: one padded row per coordinate, all
/// rows sharing the maximal unpadded length; read columnwise the rows form
/// a word over the d-fold product digit alphabet.
struct RepMatrix {
    std::vector<DigitWord> rows;

    std::size_t width() const { return rows.empty() ? 0 : rows[0].size(); }

    /// Column-major view: one (d1,...,dd) tuple per column.
    std::string column_string() const;
};

/// Rowwise rep + pad. All systems must share one substitution and one
/// period; the rows then live over a common digit alphabet.
RepMatrix rep_zd(const std::vector<PeriodicPoint>& systems, const std::vector<Position>& coords);

/// Rowwise val; inverse of rep_zd up to padding. Rejects ragged rows and
/// rows outside their system's language.
std::vector<Position> val_zd(const std::vector<PeriodicPoint>& systems, const RepMatrix& m);

}  // namespace subnum
