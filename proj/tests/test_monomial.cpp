#include "lexrank/monomial.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

using namespace lexrank;

TEST_SUITE_BEGIN("monomial");

TEST_CASE("lex order basics") {
    const int n = 5;
    auto m = [n](std::initializer_list<int> vs) { return SquarefreeMonomial(n, std::vector<int>(vs)); };

    CHECK(lex_compare(m({2, 4}), m({2, 5})) == LexOrder::GT);
    CHECK(lex_compare(m({1, 5}), m({2, 3})) == LexOrder::GT);
    CHECK(lex_compare(m({2, 4}), m({2, 4})) == LexOrder::EQ);
    CHECK(lex_compare(m({3, 4}), m({2, 5})) == LexOrder::LT);
    // across degrees: pure exponent lex, so x1 < x1x2 and the unit is least
    CHECK(lex_compare(m({1}), m({1, 2})) == LexOrder::LT);
    CHECK(lex_compare(m({1}), m({2, 3})) == LexOrder::GT);
    CHECK(lex_compare(SquarefreeMonomial::unit(n), m({5})) == LexOrder::LT);
    CHECK_THROWS_AS(lex_compare(m({1, 2}), SquarefreeMonomial(4, {1, 2})), std::invalid_argument);
}

TEST_CASE("all degree-2 monomials of n=5 in decreasing lex") {
    const int n = 5;
    std::vector<SquarefreeMonomial> all;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) all.push_back(SquarefreeMonomial::edge(n, a, b));
    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return lex_greater(x, y); });
    // independent expectation: pairs (a,b) ascending lexicographically on (a,b)
    std::vector<std::string> got;
    for (const auto& w : all) got.push_back(w.str());
    std::vector<std::string> want = {"x1x2", "x1x3", "x1x4", "x1x5", "x2x3",
                                     "x2x4", "x2x5", "x3x4", "x3x5", "x4x5"};
    CHECK(got == want);
}

TEST_CASE("lex order is a strict total order (n=6, degree <= 3)") {
    const int n = 6;
    std::vector<SquarefreeMonomial> all;
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) <= 3) all.push_back(SquarefreeMonomial::from_mask(n, mask));

    for (const auto& a : all)
        for (const auto& b : all) {
            auto ab = lex_compare(a, b);
            auto ba = lex_compare(b, a);
            if (a == b) {
                CHECK(ab == LexOrder::EQ);
            } else {
                CHECK(ab != LexOrder::EQ);
                CHECK((ab == LexOrder::GT) == (ba == LexOrder::LT));
            }
            for (const auto& c : all)  // transitivity
                if (ab == LexOrder::GT && lex_compare(b, c) == LexOrder::GT)
                    CHECK(lex_compare(a, c) == LexOrder::GT);
        }
}

TEST_CASE("same degree: smaller first differing index wins") {
    const int n = 7;
    std::vector<SquarefreeMonomial> deg3;
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == 3) deg3.push_back(SquarefreeMonomial::from_mask(n, mask));
    for (const auto& a : deg3)
        for (const auto& b : deg3) {
            if (a == b) continue;
            auto av = a.vars(), bv = b.vars();
            std::size_t s = 0;
            while (s < av.size() && av[s] == bv[s]) ++s;
            bool a_wins = av[s] < bv[s];
            CHECK((lex_compare(a, b) == LexOrder::GT) == a_wins);
        }
}

TEST_CASE("divides and membership") {
    const int n = 5;
    auto x13 = SquarefreeMonomial(n, {1, 3});
    auto x134 = SquarefreeMonomial(n, {1, 3, 4});
    CHECK(x13.divides(x134));
    CHECK_FALSE(x134.divides(x13));
    CHECK(SquarefreeMonomial::unit(n).divides(x13));

    MonomialIdeal I(n, {SquarefreeMonomial(n, {1, 3}), SquarefreeMonomial(n, {2, 4})});
    CHECK(I.contains(SquarefreeMonomial(n, {1, 3, 5})));
    CHECK(I.contains(SquarefreeMonomial(n, {2, 4})));
    CHECK_FALSE(I.contains(SquarefreeMonomial(n, {1, 2, 5})));
    CHECK_FALSE(I.contains(SquarefreeMonomial::unit(n)));
    CHECK(MonomialIdeal(n).is_zero());
}

TEST_CASE("minimalize: antichain, deduped, sorted; order independent") {
    const int n = 6;
    std::vector<SquarefreeMonomial> gens = {
        SquarefreeMonomial(n, {1, 2, 3}), SquarefreeMonomial(n, {1, 2}),
        SquarefreeMonomial(n, {4, 5}),    SquarefreeMonomial(n, {1, 2}),
        SquarefreeMonomial(n, {3, 4, 5}), SquarefreeMonomial(n, {2, 6}),
    };
    auto I = minimalize(n, gens);
    std::vector<std::string> got;
    for (const auto& g : I.gens()) got.push_back(g.str());
    CHECK(got == std::vector<std::string>{"x1x2", "x2x6", "x4x5"});

    // idempotent and independent of input order
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(minimalize(n, shuffled) == I);
    }
    CHECK(minimalize(n, I.gens()) == I);
}

TEST_CASE("random minimalize properties") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        std::vector<SquarefreeMonomial> gens;
        int count = 1 + static_cast<int>(rng() % 6);
        for (int g = 0; g < count; ++g) {
            std::uint64_t mask = rng() & ((1u << n) - 1);
            if (mask == 0) mask = 1;
            gens.push_back(SquarefreeMonomial::from_mask(n, mask));
        }
        auto I = minimalize(n, gens);
        // antichain
        for (const auto& a : I.gens())
            for (const auto& b : I.gens())
                if (!(a == b)) CHECK_FALSE(a.divides(b));
        // same ideal: every input generator is contained
        for (const auto& g : gens) CHECK(I.contains(g));
        // decreasing lex
        for (std::size_t s = 1; s < I.gens().size(); ++s)
            CHECK(lex_greater(I.gens()[s - 1], I.gens()[s]));
    }
}

TEST_CASE("parsing and printing") {
    CHECK(parse_monomial("x1x3", 5).str() == "x1x3");
    CHECK(parse_monomial("x1*x3", 5) == parse_monomial("x1x3", 5));
    CHECK(parse_monomial("[1,3]", 5) == parse_monomial("x1x3", 5));
    CHECK(parse_monomial(" x2 x10 ", 12).str() == "x2x10");
    CHECK(parse_monomial("1", 4).is_unit());
    CHECK_THROWS_AS(parse_monomial("x0x2", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("x1x6", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("x1x1", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("y1", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("", 5), std::invalid_argument);
}

TEST_CASE("ambient bounds") {
    CHECK_THROWS_AS(SquarefreeMonomial(65, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SquarefreeMonomial(0, {}), std::invalid_argument);
    CHECK_NOTHROW(SquarefreeMonomial(64, {1, 64}));
    CHECK_THROWS_AS(MonomialIdeal(70), std::invalid_argument);
}

TEST_CASE("shift relabeling") {
    auto m = SquarefreeMonomial(3, {1, 3});
    auto s = shifted(m, 2, 5);
    CHECK(s.str() == "x3x5");
    CHECK_THROWS_AS(shifted(m, 3, 5), std::invalid_argument);
}

TEST_SUITE_END();
