#include "lexrank/duality.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "lexrank/lexsegment.hpp"
#include "lexrank/stanley_reisner.hpp"

using namespace lexrank;

namespace {

MonomialIdeal ideal_of(int n, const std::string& u, const std::string& v) {
    return normalize(n, parse_monomial(u, n), parse_monomial(v, n)).ideal;
}

std::vector<std::string> gen_strs(const MonomialIdeal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.gens()) out.push_back(g.str());
    return out;
}

// independent oracle: scan all 2^n vertex sets for minimal covers
MonomialIdeal brute_dual(const MonomialIdeal& I) {
    const int n = I.n();
    std::vector<std::uint64_t> covers;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool hits_all = true;
        for (const auto& g : I.gens())
            if ((s & g.mask()) == 0) {
                hits_all = false;
                break;
            }
        if (hits_all) covers.push_back(s);
    }
    std::vector<SquarefreeMonomial> gens;
    for (auto s : covers) {
        bool minimal = true;
        for (auto t : covers)
            if (t != s && (t & s) == t) {
                minimal = false;
                break;
            }
        if (minimal) gens.push_back(SquarefreeMonomial::from_mask(n, s));
    }
    return MonomialIdeal(n, gens);
}

}  // namespace

TEST_SUITE_BEGIN("duality");

TEST_CASE("alexander dual worked examples") {
    CHECK(gen_strs(alexander_dual(ideal_of(5, "x1x3", "x2x4"))) ==
          std::vector<std::string>{"x1x2", "x1x3x4", "x3x4x5"});
    CHECK(gen_strs(alexander_dual(ideal_of(5, "x1x3", "x1x5"))) ==
          std::vector<std::string>{"x1", "x3x4x5"});
    CHECK(gen_strs(alexander_dual(ideal_of(4, "x1x2", "x3x4"))) ==
          std::vector<std::string>{"x1x2x3", "x1x2x4", "x1x3x4", "x2x3x4"});
    // I_{3,2} is self-dual
    auto I32 = ideal_of(3, "x1x2", "x2x3");
    CHECK(alexander_dual(I32) == I32);
}

TEST_CASE("dual matches the brute-force cover oracle on all segments, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<SquarefreeMonomial> all;
        for (int a = 1; a < n; ++a)
            for (int b = a + 1; b <= n; ++b) all.push_back(SquarefreeMonomial::edge(n, a, b));
        for (const auto& u : all)
            for (const auto& v : all) {
                if (!lex_geq(u, v) || !u.contains(1)) continue;
                auto I = MonomialIdeal(n, build_segment(n, u, v));
                CHECK(alexander_dual(I) == brute_dual(I));
            }
    }
}

TEST_CASE("involution and dual-dual on random squarefree ideals") {
    std::mt19937 rng(20240815);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);  // 2..7
        int count = 1 + static_cast<int>(rng() % 5);
        std::vector<SquarefreeMonomial> gens;
        for (int g = 0; g < count; ++g) {
            std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
            if (mask == 0) mask = 1;
            gens.push_back(SquarefreeMonomial::from_mask(n, mask));
        }
        auto I = MonomialIdeal(n, gens);
        if (I.is_unit()) continue;  // dual of the unit ideal is the zero ideal
        auto D = alexander_dual(I);
        CHECK(D == brute_dual(I));
        CHECK(alexander_dual(D) == I);
    }
}

TEST_CASE("zero and unit ideals are rejected") {
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal(4)), std::invalid_argument);
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal(4, {SquarefreeMonomial::unit(4)})),
                    std::invalid_argument);
}

TEST_CASE("dual presentation ties primes of I^* to edges of I") {
    auto L = normalize(5, parse_monomial("x1x3", 5), parse_monomial("x2x4", 5));
    auto pres = dual_presentation(L);
    CHECK(pres.primes == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
    CHECK(pres.dual_gens == alexander_dual(L.ideal));

    // unmixedness statement: minimal primes of I^* are exactly the edges of I
    auto primes = minimal_primes(pres.dual_gens);
    std::vector<std::vector<int>> edges;
    for (const auto& g : L.ideal.gens()) edges.push_back(g.vars());
    std::sort(edges.begin(), edges.end());
    CHECK(primes == edges);
}

TEST_CASE("dual_projdim closed form vs hochster oracle (terai)") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<SquarefreeMonomial> all;
        for (int a = 1; a < n; ++a)
            for (int b = a + 1; b <= n; ++b) all.push_back(SquarefreeMonomial::edge(n, a, b));
        for (const auto& u : all)
            for (const auto& v : all) {
                if (!lex_geq(u, v)) continue;
                auto L = normalize(n, u, v);
                CAPTURE(n);
                CAPTURE(u.str());
                CAPTURE(v.str());
                CHECK(dual_projdim(L) == invariants(L).reg);
                CHECK(terai_check(L, FieldSpec::gf2()));
            }
    }
}

TEST_CASE("height of dual equals indeg of I and vice versa") {
    // |smallest cover| = height(I) = n - dim; smallest generator degree of I^*
    for (int n = 3; n <= 6; ++n) {
        std::vector<SquarefreeMonomial> all;
        for (int a = 1; a < n; ++a)
            for (int b = a + 1; b <= n; ++b) all.push_back(SquarefreeMonomial::edge(n, a, b));
        for (const auto& u : all)
            for (const auto& v : all) {
                if (!lex_geq(u, v) || !u.contains(1)) continue;
                auto L = normalize(n, u, v);
                auto D = alexander_dual(L.ideal);
                CHECK(*D.indeg() == invariants(L).height);
                CHECK(*L.ideal.indeg() == height_of(D));
            }
    }
}

TEST_SUITE_END();
