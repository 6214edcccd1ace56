#include "doctest.h"

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "subnum/automaton.hpp"
#include "subnum/multidim.hpp"
#include "subnum/numeration.hpp"

using namespace subnum;
using subnum::testing::reference_systems;

TEST_CASE("rep: table spot checks") {
    auto systems = reference_systems();
    const PeriodicPoint& alpha = systems[0].pp;
    const PeriodicPoint& gamma = systems[2].pp;
    const PeriodicPoint& delta = systems[3].pp;
    const PeriodicPoint& tau = systems[4].pp;
    const PeriodicPoint& chi = systems[5].pp;
    const PeriodicPoint& xi = systems[6].pp;

    CHECK(rep(gamma, 10).str() == "0010010");
    CHECK(rep(tau, -5).str() == "1010110");
    CHECK(rep(chi, 4).str() == "020");
    CHECK(rep(alpha, -2).str() == "110");
    CHECK(rep(delta, -2).str() == "101");
    CHECK(rep(xi, 9).str() == "0100000000");
    for (const auto& sys : systems) {
        CHECK(rep(sys.pp, 0).str() == "0");
        CHECK(rep(sys.pp, -1).str() == "1");
    }
}

TEST_CASE("val: inverse walk") {
    auto systems = reference_systems();
    const PeriodicPoint& gamma = systems[2].pp;
    const PeriodicPoint& tau = systems[4].pp;

    CHECK(val(gamma, DigitWord::parse("0010010")) == 10);
    CHECK(val(tau, DigitWord::parse("1011011")) == -1);  // padded form of "1"
    CHECK(val(gamma, DigitWord{0}) == 0);
    CHECK(val(gamma, DigitWord{1}) == -1);

    CHECK_THROWS_WITH_AS(val(gamma, DigitWord::parse("011")), doctest::Contains("no transition"),
                         Error);
    CHECK_THROWS_WITH_AS(val(gamma, DigitWord::parse("01")), doctest::Contains("1 mod 2"), Error);
    CHECK_THROWS_AS(val(gamma, DigitWord{}), Error);
    CHECK_THROWS_AS(val(gamma, DigitWord{2, 0, 0}), Error);
}

TEST_CASE("is_canonical") {
    auto systems = reference_systems();
    const PeriodicPoint& beta = systems[1].pp;
    const PeriodicPoint& gamma = systems[2].pp;

    CHECK(is_canonical(gamma, DigitWord::parse("100")));
    CHECK(!is_canonical(gamma, DigitWord::parse("10100")));  // 1.W_max prefix, W_max = 01
    CHECK(!is_canonical(gamma, DigitWord::parse("01")));     // length 2 is not 1 mod 2
    CHECK(!is_canonical(beta, DigitWord::parse("00")));      // 0.W_min prefix
    CHECK(is_canonical(beta, DigitWord::parse("10")));
    CHECK(!is_canonical(gamma, DigitWord::parse("011")));    // rejected by the automaton
    CHECK(!is_canonical(gamma, DigitWord{}));
    CHECK(!is_canonical(gamma, DigitWord{7}));
}

TEST_CASE("order: interleaving of 1-words and 0-words") {
    auto lt = [](const char* a, const char* b) {
        return order_less(DigitWord::parse(a), DigitWord::parse(b));
    };
    // ... < 10 < 11 < 1 < 0 < 00 < 01 < ...
    CHECK(lt("10", "1"));
    CHECK(lt("1", "0"));
    CHECK(lt("0", "01"));
    CHECK(lt("10", "11"));
    CHECK(lt("100", "101"));
    CHECK(lt("100", "10"));
    CHECK(lt("11", "1"));
    CHECK(lt("0", "00"));
    CHECK(!lt("01", "0"));
    CHECK(order_compare(DigitWord::parse("0101"), DigitWord::parse("0101")) ==
          std::strong_ordering::equal);
    CHECK_THROWS_AS(order_compare(DigitWord{}, DigitWord{0}), Error);
    CHECK_THROWS_AS(order_compare(DigitWord{2, 0}, DigitWord{0}), Error);
}

TEST_CASE("order is total on random sign words") {
    std::mt19937 rng(4242);
    auto random_sign_word = [&] {
        DigitWord w{static_cast<std::uint32_t>(rng() % 2)};
        std::size_t len = rng() % 6;
        for (std::size_t i = 0; i < len; ++i) w.push_back(rng() % 3);
        return w;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        DigitWord a = random_sign_word(), b = random_sign_word(), c = random_sign_word();
        auto ab = order_compare(a, b), ba = order_compare(b, a);
        if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
        if (ab == std::strong_ordering::greater) CHECK(ba == std::strong_ordering::less);
        CHECK((ab == std::strong_ordering::equal) == (a == b));
        if (order_less(a, b) && order_less(b, c)) CHECK(order_less(a, c));
    }
}

TEST_CASE("round trip, monotonicity, sign and length class") {
    for (const auto& sys : reference_systems()) {
        CAPTURE(sys.label);
        const unsigned p = sys.pp.period();
        DigitWord prev;
        for (long n = -1000; n <= 1000; ++n) {
            DigitWord w = rep(sys.pp, n);
            CHECK(val(sys.pp, w) == n);
            CHECK((w.size() - 1) % p == 0);
            CHECK(w[0] == (n >= 0 ? 0u : 1u));
            CHECK(is_canonical(sys.pp, w));
            if (n > -1000) CHECK(order_less(prev, w));
            prev = w;
        }
    }
}

TEST_CASE("rep image equals the language minus forbidden cones") {
    for (const auto& sys : reference_systems()) {
        CAPTURE(sys.label);
        const Substitution& s = sys.pp.substitution();
        const unsigned p = sys.pp.period();
        Dfao d = build_dfao(sys.pp);
        NeutralWords nw = neutral_words(sys.pp);
        DigitWord cone0 = DigitWord{0} + nw.w_min;
        DigitWord cone1 = DigitWord{1} + nw.w_max;
        Letter a = sys.pp.seed().right, b = sys.pp.seed().left;

        for (unsigned ell = 0; ell <= 3; ++ell) {
            // canonical words of length ell*p + 1, in increasing order:
            // 1-words for n in [-|eta^{p ell}(b)|, -|eta^{p(ell-1)}(b)|),
            // then 0-words for n in [|eta^{p(ell-1)}(a)|, |eta^{p ell}(a)|)
            std::vector<DigitWord> from_rep;
            if (ell == 0) {
                from_rep = {DigitWord{1}, DigitWord{0}};
            } else {
                Position lo = -s.image_length(b, p * ell);
                Position hi = -s.image_length(b, p * (ell - 1));
                for (Position n = lo; n < hi; ++n) from_rep.push_back(rep(sys.pp, n));
                lo = s.image_length(a, p * (ell - 1));
                hi = s.image_length(a, p * ell);
                for (Position n = lo; n < hi; ++n) from_rep.push_back(rep(sys.pp, n));
            }

            std::vector<DigitWord> from_language;
            for (const DigitWord& w : enumerate_language(d, ell * p + 1))
                if (!w.starts_with(cone0) && !w.starts_with(cone1)) from_language.push_back(w);
            std::sort(from_language.begin(), from_language.end(), order_less);

            CHECK(from_rep == from_language);
        }
    }
}

TEST_CASE("rep is the unique increasing bijection fixing 0 -> '0'") {
    for (const auto& sys : reference_systems()) {
        CAPTURE(sys.label);
        const Substitution& s = sys.pp.substitution();
        const unsigned p = sys.pp.period();
        Dfao d = build_dfao(sys.pp);
        NeutralWords nw = neutral_words(sys.pp);
        DigitWord cone0 = DigitWord{0} + nw.w_min;
        DigitWord cone1 = DigitWord{1} + nw.w_max;

        std::vector<DigitWord> words;
        for (unsigned ell = 0; ell <= 4; ++ell)
            for (const DigitWord& w : enumerate_language(d, ell * p + 1))
                if (!w.starts_with(cone0) && !w.starts_with(cone1)) words.push_back(w);
        std::sort(words.begin(), words.end(), order_less);

        auto zero = std::find(words.begin(), words.end(), DigitWord{0});
        REQUIRE(zero != words.end());
        Position n = 0;
        for (auto it = zero; it != words.end(); ++it, ++n) CHECK(rep(sys.pp, n) == *it);
        n = -1;
        for (auto it = zero; it != words.begin(); --n) {
            --it;
            CHECK(rep(sys.pp, n) == *it);
        }
    }
}
