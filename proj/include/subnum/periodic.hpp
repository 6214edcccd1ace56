#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subnum/core.hpp"

namespace subnum {

// The two letters u_{-1}|u_0 around the origin of a two-sided word.
struct Seed {
    Letter left;   // u_{-1}
    Letter right;  // u_0
    friend bool operator==(const Seed&, const Seed&) = default;
};

/// A two-sided periodic point of a substitution, identified by a growing
/// seed u_{-1}|u_0 fixed by eta^p, with p the minimal such period:
/// u = lim eta^{pk}(u_{-1}) | eta^{pk}(u_0).
class PeriodicPoint {
public:
    /// Validates seed text "LEFT|RIGHT". Rejects seeds whose letters are
    /// not growing and seeds not fixed by any power of the substitution.
    static PeriodicPoint make(const Substitution& s, std::string_view seed_text);
    static PeriodicPoint make(const Substitution& s, Seed seed);

    const Substitution& substitution() const { return sub_; }
    const Seed& seed() const { return seed_; }
    unsigned period() const { return period_; }

    std::string seed_text() const;  // "b|a"

    /// Materializes u_{n_lo} ... u_{n_hi - 1} by iterating eta^p on the
    /// seed letters and slicing. Brute-force oracle; letter queries should
    /// go through the automaton instead.
    Word expand_segment(const Position& n_lo, const Position& n_hi) const;

private:
    PeriodicPoint(Substitution s, Seed seed, unsigned period);
    Substitution sub_;
    Seed seed_;
    unsigned period_;
};

struct SeedInfo {
    Seed seed;
    unsigned period;  // minimal
};

/// All seeds of two-sided periodic points with growing seed letters:
/// pairs (b, a) with b on a cycle of the last-letter map and a on a cycle
/// of the first-letter map. Sorted by letter names, left then right.
std::vector<SeedInfo> enumerate_seeds(const Substitution& s);

}  // namespace subnum
