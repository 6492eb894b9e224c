#pragma once

#include "lexrank/monomial.hpp"
#include "lexrank/polynomial.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace lexrank {

// Raised when an input would exceed the configured engine limits (this is a
// refusal, not a mathematical verdict).
struct GroebnerLimitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GroebnerLimits {
    // variables actually used by the input, plus the Rabinowitsch variable
    int max_vars = 10;
    // hard safety caps; generously above anything the sweeps produce
    std::size_t max_basis = 20000;
};

template <class F>
struct GroebnerBasis {
    std::vector<Polynomial<F>> polys;  // reduced, monic, sorted by decreasing lead

    bool is_unit() const {
        return polys.size() == 1 && poly_is_constant(polys[0]);
    }
};

// Full normal form: reduces the lead against the first divisor in G, moves
// irreducible leads to the remainder (so the tail is reduced too).
template <class F>
Polynomial<F> normal_form(const F& K, Polynomial<F> f, const std::vector<Polynomial<F>>& G) {
    Polynomial<F> rem;
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (expv_divides(g.lead_exp(), f.lead_exp())) {
                auto m = expv_div(f.lead_exp(), g.lead_exp());
                auto c = K.div(f.lead_coeff(), g.lead_coeff());
                poly_axpy(K, f, m, K.neg(c), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            add_term(K, rem, f.lead_exp(), f.lead_coeff());
            f.terms.erase(std::prev(f.terms.end()));
        }
    }
    return rem;
}

namespace detail {

template <class F>
Polynomial<F> s_polynomial(const F& K, const Polynomial<F>& f, const Polynomial<F>& g) {
    auto l = expv_lcm(f.lead_exp(), g.lead_exp());
    // both inputs are kept monic, so no coefficient juggling
    Polynomial<F> s;
    poly_axpy(K, s, expv_div(l, f.lead_exp()), K.one(), f);
    poly_axpy(K, s, expv_div(l, g.lead_exp()), K.neg(K.one()), g);
    return s;
}

}  // namespace detail

// Buchberger with normal pair selection (smallest lcm degree first, ties by
// pair index) and the coprime-lead criterion, followed by inter-reduction.
// Output is the unique reduced basis, sorted by decreasing leading monomial.
template <class F>
GroebnerBasis<F> buchberger(const F& K, std::vector<Polynomial<F>> gens,
                            const GroebnerLimits& limits = {}) {
    std::vector<Polynomial<F>> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(poly_monic(K, g));

    GroebnerBasis<F> out;
    if (basis.empty()) return out;

    auto unit_basis = [&K, &basis]() {
        GroebnerBasis<F> u;
        u.polys.push_back(poly_const(K, K.one(), basis[0].lead_exp().size()));
        return u;
    };
    for (const auto& g : basis)
        if (poly_is_constant(g)) return unit_basis();

    // pending S-pairs keyed by (lcm degree, i, j)
    std::set<std::tuple<long long, std::size_t, std::size_t>> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto l = expv_lcm(basis[i].lead_exp(), basis[j].lead_exp());
            pairs.insert({total_degree(l), i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const auto& fi = basis[i];
        const auto& fj = basis[j];
        // coprime leads: S-polynomial reduces to zero
        if (expv_lcm(fi.lead_exp(), fj.lead_exp()) ==
            expv_mul(fi.lead_exp(), fj.lead_exp()))
            continue;
        auto r = normal_form(K, detail::s_polynomial(K, fi, fj), basis);
        if (r.is_zero()) continue;
        if (poly_is_constant(r)) return unit_basis();
        basis.push_back(poly_monic(K, r));
        if (basis.size() > limits.max_basis)
            throw GroebnerLimitError("buchberger: basis size cap exceeded");
        push_pairs(basis.size() - 1);
    }

    // minimal: drop elements whose lead is divisible by another lead
    std::vector<Polynomial<F>> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
            if (a == b) continue;
            if (expv_divides(basis[b].lead_exp(), basis[a].lead_exp())) {
                // tie on equal leads: keep the earlier one
                redundant = !(basis[b].lead_exp() == basis[a].lead_exp() && b > a);
            }
        }
        if (!redundant) minimal.push_back(basis[a]);
    }
    // reduced: tail-reduce each against the rest
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial<F>> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        minimal[a] = poly_monic(K, normal_form(K, minimal[a], others));
    }
    std::sort(minimal.begin(), minimal.end(), [](const auto& x, const auto& y) {
        return drl_less(y.lead_exp(), x.lead_exp());
    });
    out.polys = std::move(minimal);
    return out;
}

int count_used_vars(const std::vector<RatPoly>& polys);

// Rabinowitsch: f in sqrt(gens) iff 1 in (gens, 1 - t f). Inputs live in the
// x-slots only; the t slot must be free.
bool radical_member(const RatPoly& f, const std::vector<RatPoly>& gens, const FieldSpec& field,
                    const GroebnerLimits& limits = {});

// sqrt(polys) == I, checked as: every term of every poly has support in I
// (containment), and every generator of I is a radical member of (polys).
// On failure, *why (if given) names the offending direction and element.
bool radical_equals_ideal(const std::vector<RatPoly>& polys, const MonomialIdeal& I,
                          const FieldSpec& field, const GroebnerLimits& limits = {},
                          std::string* why = nullptr);

}  // namespace lexrank
