#include "lexrank/groebner.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lexrank/lexsegment.hpp"

using namespace lexrank;

namespace {

const RationalField Q;

RatPoly rp(std::vector<std::pair<Expv, long>> terms) {
    RatPoly p;
    for (const auto& [e, c] : terms) add_term(Q, p, e, Rational(c));
    return p;
}

RatPoly mono_poly(int n, const std::string& text) {
    return poly_from_monomials(Q, {parse_monomial(text, n)}, static_cast<std::size_t>(n) + 1);
}

std::vector<RatPoly> ideal_polys(const MonomialIdeal& I) {
    std::vector<RatPoly> out;
    for (const auto& g : I.gens())
        out.push_back(poly_from_monomials(Q, {g}, static_cast<std::size_t>(I.n()) + 1));
    return out;
}

std::vector<std::string> texts(const GroebnerBasis<RationalField>& gb) {
    std::vector<std::string> out;
    for (const auto& p : gb.polys) out.push_back(poly_to_text(Q, p));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("groebner");

TEST_CASE("reduced basis of a binomial pair (worked by hand)") {
    // f1 = x1x2 + x3x4x5, f2 = x1x3x4 in 5 variables (+ reserved t slot);
    // the only nontrivial S-pair contributes x1^2 x2.
    auto f1 = rp({{{1, 1, 0, 0, 0, 0}, 1}, {{0, 0, 1, 1, 1, 0}, 1}});
    auto f2 = rp({{{1, 0, 1, 1, 0, 0}, 1}});
    auto gb = buchberger(Q, {f1, f2});
    CHECK_FALSE(gb.is_unit());
    CHECK(texts(gb) == std::vector<std::string>{"x1^2x2", "x1x3x4", "x1x2+x3x4x5"});

    // identical result from the opposite input order
    auto gb2 = buchberger(Q, {f2, f1});
    CHECK(gb.polys == gb2.polys);
}

TEST_CASE("groebner basis properties on monomial + binomial inputs") {
    auto f1 = rp({{{1, 1, 0, 0, 0, 0}, 1}, {{0, 0, 1, 1, 1, 0}, 1}});
    auto f2 = rp({{{1, 0, 1, 1, 0, 0}, 1}});
    auto f3 = rp({{{0, 1, 0, 1, 0, 0}, 2}, {{0, 0, 0, 0, 1, 0}, -3}});
    std::vector<RatPoly> gens{f1, f2, f3};
    auto gb = buchberger(Q, gens);
    // inputs reduce to zero
    for (const auto& g : gens) CHECK(normal_form(Q, g, gb.polys).is_zero());
    // every S-polynomial reduces to zero
    for (std::size_t a = 0; a < gb.polys.size(); ++a)
        for (std::size_t b = a + 1; b < gb.polys.size(); ++b)
            CHECK(normal_form(Q, detail::s_polynomial(Q, gb.polys[a], gb.polys[b]), gb.polys)
                      .is_zero());
    // reduced: no term of any element is divisible by another lead
    for (std::size_t a = 0; a < gb.polys.size(); ++a)
        for (const auto& [e, c] : gb.polys[a].terms)
            for (std::size_t b = 0; b < gb.polys.size(); ++b) {
                if (a == b) continue;
                CHECK_FALSE(expv_divides(gb.polys[b].lead_exp(), e));
            }
    // monic and sorted strictly decreasing
    for (const auto& p : gb.polys) CHECK(Q.is_one(p.lead_coeff()));
    for (std::size_t a = 0; a + 1 < gb.polys.size(); ++a)
        CHECK(drl_less(gb.polys[a + 1].lead_exp(), gb.polys[a].lead_exp()));
}

TEST_CASE("unit ideal detection") {
    auto one_minus_x1 = rp({{{0, 0}, 1}, {{1, 0}, -1}});
    auto x1 = rp({{{1, 0}, 1}});
    auto gb = buchberger(Q, {x1, one_minus_x1});
    CHECK(gb.is_unit());
    CHECK(texts(gb) == std::vector<std::string>{"1"});
}

TEST_CASE("normal form basics") {
    auto I52 = MonomialIdeal(5, build_segment(5, parse_monomial("x1x2", 5),
                                              parse_monomial("x4x5", 5)));
    auto G = ideal_polys(I52);
    CHECK(normal_form(Q, mono_poly(5, "x1x2x3x4x5"), G).is_zero());
    CHECK(normal_form(Q, mono_poly(5, "x1x2"), G).is_zero());
    auto r = normal_form(Q, rp({{{1, 0, 0, 0, 0, 0}, 1}, {{0, 1, 0, 0, 0, 0}, 1}}), G);
    CHECK(poly_to_text(Q, r) == "x1+x2");  // degree 1: untouched
}

TEST_CASE("radical membership: worked examples") {
    // sqrt(x1x3x4, x1x2 + x3x4x5) contains x1x2 and x3x4x5 but not x1
    auto f1 = rp({{{1, 0, 1, 1, 0, 0}, 1}});
    auto f2 = rp({{{1, 1, 0, 0, 0, 0}, 1}, {{0, 0, 1, 1, 1, 0}, 1}});
    std::vector<RatPoly> gens{f1, f2};
    for (auto fs : {FieldSpec::gfp(32003), FieldSpec::rationals()}) {
        CHECK(radical_member(mono_poly(5, "x1x2"), gens, fs));
        CHECK(radical_member(mono_poly(5, "x3x4x5"), gens, fs));
        CHECK(radical_member(mono_poly(5, "x1x3x4"), gens, fs));
        CHECK_FALSE(radical_member(mono_poly(5, "x1"), gens, fs));
        CHECK_FALSE(radical_member(mono_poly(5, "x2x3"), gens, fs));
        CHECK(radical_member(poly_zero(Q), gens, fs));
    }
    // non-radical trivia: x1 in sqrt(x1^2)
    auto sq = rp({{{2, 0}, 1}});
    CHECK(radical_member(rp({{{1, 0}, 1}}), {sq}, FieldSpec::gfp(32003)));
    // 1 is not in the radical of a proper ideal
    CHECK_FALSE(radical_member(rp({{{0, 0}, 1}}), {rp({{{1, 0}, 1}})}, FieldSpec::gfp(32003)));
}

TEST_CASE("radical membership agrees with the support oracle on monomial ideals") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);  // 3..5
        std::vector<SquarefreeMonomial> gens;
        int count = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < count; ++g) {
            std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
            if (mask == 0) mask = 1;
            gens.push_back(SquarefreeMonomial::from_mask(n, mask));
        }
        auto I = MonomialIdeal(n, gens);
        if (I.is_unit()) continue;
        auto polys = ideal_polys(I);
        std::uint64_t probe = rng() & ((std::uint64_t{1} << n) - 1);
        if (probe == 0) probe = (std::uint64_t{1} << n) - 1;
        auto m = SquarefreeMonomial::from_mask(n, probe);
        bool expect = I.contains_support(probe);
        CAPTURE(n);
        CAPTURE(m.str());
        CHECK(radical_member(poly_from_monomials(Q, {m}, static_cast<std::size_t>(n) + 1), polys,
                             FieldSpec::gfp(32003)) == expect);
    }
}

TEST_CASE("radical_equals_ideal: positive and negative verdicts") {
    // I^* of the segment (5, x1x3, x2x4)
    auto dual = MonomialIdeal(
        5, {parse_monomial("x1x2", 5), parse_monomial("x1x3x4", 5), parse_monomial("x3x4x5", 5)});
    auto f1 = rp({{{1, 0, 1, 1, 0, 0}, 1}});                            // x1x3x4
    auto f2 = rp({{{1, 1, 0, 0, 0, 0}, 1}, {{0, 0, 1, 1, 1, 0}, 1}});   // x1x2 + x3x4x5

    std::string why;
    CHECK(radical_equals_ideal({f1, f2}, dual, FieldSpec::gfp(32003), {}, &why));
    CHECK(radical_equals_ideal({f1, f2}, dual, FieldSpec::rationals(), {}, &why));

    // dropping f2 loses x1x2
    CHECK_FALSE(radical_equals_ideal({f1}, dual, FieldSpec::gfp(32003), {}, &why));
    CHECK(why.find("x1x2") != std::string::npos);

    // a term outside the ideal breaks containment
    auto bad = rp({{{1, 1, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 1, 0}, 1}});  // x1x2 + x5
    why.clear();
    CHECK_FALSE(radical_equals_ideal({f1, f2, bad}, dual, FieldSpec::gfp(32003), {}, &why));
    CHECK(why.find("x5") != std::string::npos);
}

TEST_CASE("certificate sums generate the segment ideal up to radical") {
    // Schmitt-Vogel style check: the three antidiagonal sums for (5, x1x3, x2x4)
    auto L = normalize(5, parse_monomial("x1x3", 5), parse_monomial("x2x4", 5));
    auto s1 = mono_poly(5, "x1x3");
    auto s2 = poly_add(Q, mono_poly(5, "x1x4"), mono_poly(5, "x2x3"));
    auto s3 = poly_add(Q, mono_poly(5, "x1x5"), mono_poly(5, "x2x4"));
    std::string why;
    bool ok = radical_equals_ideal({s1, s2, s3}, L.ideal, FieldSpec::gfp(32003), {}, &why);
    CAPTURE(why);
    CHECK(ok);
}

TEST_CASE("variable limit is a refusal, not a verdict") {
    const int n = 11;
    std::vector<int> vars;
    for (int a = 1; a <= n; ++a) vars.push_back(a);
    auto big = poly_from_monomials(Q, {SquarefreeMonomial(n, vars)},
                                   static_cast<std::size_t>(n) + 1);
    CHECK_THROWS_AS(radical_member(mono_poly(11, "x1"), {big}, FieldSpec::gfp(32003)),
                    GroebnerLimitError);
    // raising the cap makes the same query answerable
    GroebnerLimits loose;
    loose.max_vars = 16;
    CHECK(radical_member(mono_poly(11, "x1x2x3x4x5x6x7x8x9x10x11"), {big},
                         FieldSpec::gfp(32003), loose));
}

TEST_CASE("reserved slot must stay free") {
    auto uses_t = rp({{{1, 0, 0, 0, 0, 1}, 1}});  // x1 * t
    CHECK_THROWS_AS(radical_member(uses_t, {mono_poly(5, "x1x2")}, FieldSpec::gfp(32003)),
                    std::invalid_argument);
    CHECK_THROWS_AS(radical_member(mono_poly(5, "x1x2"), {uses_t}, FieldSpec::gfp(32003)),
                    std::invalid_argument);
}

TEST_CASE("determinism under input shuffles") {
    auto I = MonomialIdeal(6, build_segment(6, parse_monomial("x1x5", 6),
                                            parse_monomial("x3x4", 6)));
    auto base = ideal_polys(I);
    base.push_back(rp({{{1, 1, 0, 0, 0, 0, 0}, 1}, {{0, 0, 1, 1, 1, 1, 0}, -1}}));
    auto reference = buchberger(Q, base);
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 6; ++trial) {
        auto shuffled = base;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(buchberger(Q, shuffled).polys == reference.polys);
    }
}

TEST_SUITE_END();
