#include "subnum/bundled.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace subnum {

namespace {

struct BundledEntry {
    std::string_view name;
    std::string_view config;
};

constexpr std::array<BundledEntry, 6> kBundled{{
    {"thue_morse",
     "# Thue-Morse\n"
     "a -> ab\n"
     "b -> ba\n"},
    {"psi2",
     "# a 2-uniform substitution with a period-1 two-sided fixed point\n"
     "a -> ab\n"
     "b -> cb\n"
     "c -> ac\n"},
    {"fibonacci",
     "# Fibonacci\n"
     "a -> ab\n"
     "b -> a\n"},
    {"tribonacci",
     "# Tribonacci\n"
     "a -> ab\n"
     "b -> ac\n"
     "c -> a\n"},
    {"mu_intro",
     "a -> abc\n"
     "b -> c\n"
     "c -> ac\n"},
    {"rho_nonprimitive",
     "# non-primitive: c is not growing\n"
     "a -> ac\n"
     "b -> cb\n"
     "c -> c\n"},
}};

constexpr std::array<std::string_view, 6> kNames{
    kBundled[0].name, kBundled[1].name, kBundled[2].name,
    kBundled[3].name, kBundled[4].name, kBundled[5].name,
};

}  // namespace

std::span<const std::string_view> bundled_names() { return kNames; }

std::string_view bundled_config(std::string_view name) {
    for (const BundledEntry& e : kBundled)
        if (e.name == name) return e.config;
    throw Error("unknown bundled substitution '" + std::string(name) + "'");
}

Substitution load_substitution(const std::string& name_or_path) {
    for (const BundledEntry& e : kBundled)
        if (e.name == name_or_path) return Substitution::parse(e.config);
    std::ifstream in(name_or_path);
    if (!in)
        throw Error("'" + name_or_path + "' is neither a bundled substitution nor a readable file");
    std::ostringstream text;
    text << in.rdbuf();
    return Substitution::parse(text.str());
}

}  // namespace subnum
