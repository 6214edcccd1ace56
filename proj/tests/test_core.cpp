#include "doctest.h"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "helpers.hpp"
#include "subnum/core.hpp"

using namespace subnum;
using subnum::testing::random_word;

namespace {

std::set<std::string> growing_names(const Substitution& s) {
    std::set<std::string> out;
    for (Letter a : s.growing_letters()) out.insert(s.letter_name(a));
    return out;
}

}  // namespace

TEST_CASE("parse: Fibonacci substitution") {
    auto s = Substitution::parse("a -> ab\nb -> a");
    CHECK(s.alphabet_size() == 2);
    CHECK(s.max_image_size() == 2);
    Letter a = s.letter("a"), b = s.letter("b");
    CHECK(s.image(a) == Word{a, b});
    CHECK(s.image(b) == Word{a});
    CHECK(!s.find_letter("c").has_value());
}

TEST_CASE("parse: comments, blank lines, multi-character letters") {
    auto s = Substitution::parse(
        "# two tiles\n"
        "t1 -> t1 t2\n"
        "\n"
        "t2 -> t1   # back to the first\n");
    CHECK(s.alphabet_size() == 2);
    CHECK(s.image(s.letter("t1")) == Word{s.letter("t1"), s.letter("t2")});
    CHECK(s.word_string(s.image(s.letter("t1"))) == "t1 t2");
}

TEST_CASE("parse: exact letter match wins over juxtaposition") {
    auto s = Substitution::parse(
        "ab -> ab a\n"
        "a -> ab b\n"
        "b -> a\n");
    CHECK(s.image(s.letter("ab")) == Word{s.letter("ab"), s.letter("a")});
    CHECK(s.image(s.letter("a")) == Word{s.letter("ab"), s.letter("b")});
}

TEST_CASE("parse: rejects bad configs") {
    CHECK_THROWS_WITH_AS(Substitution::parse("a -> a"), doctest::Contains("no growing letter"),
                         Error);
    CHECK_THROWS_WITH_AS(Substitution::parse("a -> ab\nb -> "),
                         doctest::Contains("empty image"), Error);
    CHECK_THROWS_WITH_AS(Substitution::parse("a -> ab"), doctest::Contains("unknown letter"),
                         Error);
    CHECK_THROWS_WITH_AS(Substitution::parse("a -> ab\nb -> a\na -> b"),
                         doctest::Contains("duplicate rule"), Error);
    CHECK_THROWS_AS(Substitution::parse("a | b -> ab"), Error);
    CHECK_THROWS_AS(Substitution::parse(""), Error);
}

TEST_CASE("apply: morphism on words") {
    auto phi = Substitution::parse("a -> ab\nb -> a");
    Letter a = phi.letter("a"), b = phi.letter("b");
    CHECK(phi.apply({a, b}) == Word{a, b, a});
    CHECK(phi.apply({}) == Word{});

    auto tri = Substitution::parse("a -> ab\nb -> ac\nc -> a");
    CHECK(tri.word_string(tri.apply_power({tri.letter("a")}, 3)) == "abacaba");
}

TEST_CASE("image_length: by length-vector iteration") {
    auto phi = Substitution::parse("a -> ab\nb -> a");
    CHECK(phi.image_length(phi.letter("a"), 6) == 21);  // 1,2,3,5,8,13,21
    CHECK(phi.image_length(phi.letter("a"), 0) == 1);
    CHECK(phi.image_length(phi.letter("b"), 0) == 1);

    auto rho = Substitution::parse("a -> ac\nb -> cb\nc -> c");
    CHECK(rho.image_length(rho.letter("c"), 10) == 1);
}

TEST_CASE("image_length agrees with materialized words") {
    for (std::string_view name : bundled_names()) {
        auto s = load_substitution(std::string(name));
        REQUIRE(s.alphabet_size() <= 4);
        for (std::uint32_t i = 0; i < s.alphabet_size(); ++i) {
            Letter a{i};
            for (unsigned k = 0; k <= 12; ++k) {
                Word w = s.apply_power({a}, k);
                CHECK(Position(w.size()) == s.image_length(a, k));
            }
        }
    }
}

TEST_CASE("image_length is monotone in k") {
    for (std::string_view name : bundled_names()) {
        auto s = load_substitution(std::string(name));
        for (std::uint32_t i = 0; i < s.alphabet_size(); ++i)
            for (unsigned k = 0; k < 20; ++k)
                CHECK(s.image_length(Letter{i}, k + 1) >= s.image_length(Letter{i}, k));
    }
}

TEST_CASE("growing_letters") {
    auto rho = Substitution::parse("a -> ac\nb -> cb\nc -> c");
    CHECK(growing_names(rho) == std::set<std::string>{"a", "b"});

    auto phi = Substitution::parse("a -> ab\nb -> a");
    CHECK(growing_names(phi) == std::set<std::string>{"a", "b"});

    auto mu = Substitution::parse("a -> abc\nb -> c\nc -> ac");
    CHECK(growing_names(mu) == std::set<std::string>{"a", "b", "c"});
}

TEST_CASE("growing_letters agrees with long length iteration") {
    for (std::string_view name : bundled_names()) {
        auto s = load_substitution(std::string(name));
        unsigned K = 4 * static_cast<unsigned>(s.alphabet_size()) + 8;
        for (std::uint32_t i = 0; i < s.alphabet_size(); ++i) {
            Letter a{i};
            bool still_growing = s.image_length(a, K) > s.image_length(a, K - 1);
            CHECK(s.is_growing(a) == still_growing);
        }
    }
}

TEST_CASE("length cache is safe under concurrent readers") {
    auto s = load_substitution("tribonacci");
    std::vector<Position> expected;
    for (unsigned k = 0; k <= 200; ++k) expected.push_back(s.image_length(s.letter("a"), k));

    auto fresh = load_substitution("tribonacci");
    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&fresh, &expected, &mismatches, t] {
            Letter a = fresh.letter("a");
            for (int i = 0; i <= 200; ++i) {
                int k = (t % 2) ? 200 - i : i;  // half the threads read backwards
                if (fresh.image_length(a, static_cast<unsigned>(k)) !=
                    expected[static_cast<std::size_t>(k)])
                    ++mismatches;
            }
        });
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}

TEST_CASE("morphism law on random words") {
    std::mt19937 rng(1234);
    for (std::string_view name : bundled_names()) {
        auto s = load_substitution(std::string(name));
        for (int iter = 0; iter < 200; ++iter) {
            Word u = random_word(s, rng, 12), v = random_word(s, rng, 12);
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            Word lhs = s.apply(uv);
            Word rhs = s.apply(u);
            Word rv = s.apply(v);
            rhs.insert(rhs.end(), rv.begin(), rv.end());
            CHECK(lhs == rhs);
        }
    }
}
