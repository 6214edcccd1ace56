#include "subnum/multidim.hpp"

#include <algorithm>

#include "subnum/decompose.hpp"
#include "subnum/numeration.hpp"

namespace subnum {

NeutralWords neutral_words(const PeriodicPoint& pp) {
    const Substitution& s = pp.substitution();
    const unsigned p = pp.period();
    NeutralWords nw;
    nw.w_min = tail(s, p, pp.seed().right, 0);
    nw.w_max = tail(s, p, pp.seed().left, s.image_length(pp.seed().left, p) - 1);
    return nw;
}

DigitWord pad(const PeriodicPoint& pp, const DigitWord& w, std::size_t target) {
    if (w.empty() || w[0] > 1) throw Error("pad: word must start with sign digit 0 or 1");
    if (target < w.size())
        throw Error("pad: target length " + std::to_string(target) + " shorter than word");
    const unsigned p = pp.period();
    if (target % p != 1 % p)
        throw Error("pad: target length " + std::to_string(target) + " is not 1 mod " +
                    std::to_string(p));
    if ((target - w.size()) % p != 0)
        throw Error("pad: word length " + std::to_string(w.size()) + " is not 1 mod " +
                    std::to_string(p));
    const std::size_t blocks = (target - w.size()) / p;
    NeutralWords nw = neutral_words(pp);
    const DigitWord& block = w[0] == 0 ? nw.w_min : nw.w_max;
    DigitWord out{w[0]};
    for (std::size_t i = 0; i < blocks; ++i) out = out + block;
    return out + w.subword(1, w.size() - 1);
}

std::string RepMatrix::column_string() const {
    std::string out;
    for (std::size_t col = 0; col < width(); ++col) {
        if (col > 0) out += ' ';
        out += '(';
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r > 0) out += ',';
            out += std::to_string(rows[r][col]);
        }
        out += ')';
    }
    return out;
}

namespace {

void check_same_system_family(const std::vector<PeriodicPoint>& systems) {
    if (systems.empty()) throw Error("need at least one system");
    for (std::size_t i = 1; i < systems.size(); ++i) {
        if (!(systems[i].substitution() == systems[0].substitution()))
            throw Error("all coordinates must share one substitution");
        if (systems[i].period() != systems[0].period())
            throw Error("all coordinates must share one period");
    }
}

}  // namespace

RepMatrix rep_zd(const std::vector<PeriodicPoint>& systems, const std::vector<Position>& coords) {
    check_same_system_family(systems);
    if (systems.size() != coords.size())
        throw Error("got " + std::to_string(coords.size()) + " coordinates for " +
                    std::to_string(systems.size()) + " systems");
    std::vector<DigitWord> reps;
    reps.reserve(coords.size());
    std::size_t t = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        reps.push_back(rep(systems[i], coords[i]));
        t = std::max(t, reps.back().size());
    }
    RepMatrix m;
    for (std::size_t i = 0; i < reps.size(); ++i)
        m.rows.push_back(pad(systems[i], reps[i], t));
    return m;
}

std::vector<Position> val_zd(const std::vector<PeriodicPoint>& systems, const RepMatrix& m) {
    check_same_system_family(systems);
    if (systems.size() != m.rows.size())
        throw Error("got " + std::to_string(m.rows.size()) + " rows for " +
                    std::to_string(systems.size()) + " systems");
    for (const DigitWord& row : m.rows)
        if (row.size() != m.width()) throw Error("mismatched row lengths");
    std::vector<Position> out;
    out.reserve(m.rows.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i) out.push_back(val(systems[i], m.rows[i]));
    return out;
}

}  // namespace subnum
