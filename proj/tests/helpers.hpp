#pragma once

#include <random>
#include <string>
#include <vector>

#include "subnum/bundled.hpp"
#include "subnum/periodic.hpp"

namespace subnum::testing {

struct NamedSystem {
    std::string label;
    std::string config_name;
    PeriodicPoint pp;
};

// The seven reference systems, in table order: Thue-Morse a|a, 2-uniform
// b|a, Fibonacci b|a, Fibonacci a|a, Tribonacci c|a, mu c|a, rho b|a.
inline std::vector<NamedSystem> reference_systems() {
    auto mk = [](const char* label, const char* config, const char* seed) {
        return NamedSystem{label, config, PeriodicPoint::make(load_substitution(config), seed)};
    };
    return {
        mk("alpha", "thue_morse", "a|a"), mk("beta", "psi2", "b|a"),
        mk("gamma", "fibonacci", "b|a"),  mk("delta", "fibonacci", "a|a"),
        mk("tau", "tribonacci", "c|a"),   mk("chi", "mu_intro", "c|a"),
        mk("xi", "rho_nonprimitive", "b|a"),
    };
}

inline Word random_word(const Substitution& s, std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::uint32_t> letter_dist(
        0, static_cast<std::uint32_t>(s.alphabet_size() - 1));
    Word w(len_dist(rng));
    for (Letter& a : w) a = Letter{letter_dist(rng)};
    return w;
}

}  // namespace subnum::testing
