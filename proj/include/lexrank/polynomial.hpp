#pragma once

#include "lexrank/field.hpp"
#include "lexrank/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lexrank {

// Exponent vector of length nvars = n + 1; the last slot is reserved for the
// auxiliary Rabinowitsch variable t, which is smallest in the order.
using Expv = std::vector<std::uint32_t>;

inline long long total_degree(const Expv& e) {
    long long d = 0;
    for (auto x : e) d += x;
    return d;
}

// Graded reverse lexicographic with x_1 > x_2 > ... > x_n > t: higher total
// degree wins; on ties the *last* nonzero entry of a - b decides (negative
// means a > b).
inline bool drl_less(const Expv& a, const Expv& b) {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t s = a.size(); s-- > 0;) {
        if (a[s] != b[s]) return a[s] > b[s];  // larger trailing exponent = smaller monomial
    }
    return false;
}

struct DrlLess {
    bool operator()(const Expv& a, const Expv& b) const { return drl_less(a, b); }
};

inline Expv expv_mul(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) r[s] = a[s] + b[s];
    return r;
}

inline bool expv_divides(const Expv& a, const Expv& b) {  // a | b
    for (std::size_t s = 0; s < a.size(); ++s)
        if (a[s] > b[s]) return false;
    return true;
}

inline Expv expv_div(const Expv& a, const Expv& b) {  // a / b
    Expv r(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) r[s] = a[s] - b[s];
    return r;
}

inline Expv expv_lcm(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) r[s] = std::max(a[s], b[s]);
    return r;
}

inline Expv expv_one(std::size_t nvars) { return Expv(nvars, 0); }

// exponent vector of a squarefree monomial inside a ring with nvars slots
inline Expv expv_of(const SquarefreeMonomial& m, std::size_t nvars) {
    Expv e(nvars, 0);
    for (int v : m.vars()) e[static_cast<std::size_t>(v - 1)] = 1;
    return e;
}

// Sparse polynomial over the field F; terms ascending in degrevlex so the
// leading term is the last one.
template <class F>
struct Polynomial {
    using Coeff = typename F::Elem;
    std::map<Expv, Coeff, DrlLess> terms;

    bool is_zero() const { return terms.empty(); }
    const Expv& lead_exp() const { return terms.rbegin()->first; }
    const Coeff& lead_coeff() const { return terms.rbegin()->second; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms == b.terms;
    }
};

template <class F>
void add_term(const F& K, Polynomial<F>& p, const Expv& e, const typename F::Elem& c) {
    if (K.is_zero(c)) return;
    auto [it, fresh] = p.terms.emplace(e, c);
    if (!fresh) {
        it->second = K.add(it->second, c);
        if (K.is_zero(it->second)) p.terms.erase(it);
    }
}

template <class F>
Polynomial<F> poly_zero(const F&) {
    return {};
}

template <class F>
Polynomial<F> poly_const(const F& K, const typename F::Elem& c, std::size_t nvars) {
    Polynomial<F> p;
    add_term(K, p, expv_one(nvars), c);
    return p;
}

template <class F>
Polynomial<F> poly_monomial(const F& K, const Expv& e, const typename F::Elem& c) {
    Polynomial<F> p;
    add_term(K, p, e, c);
    return p;
}

template <class F>
Polynomial<F> poly_add(const F& K, const Polynomial<F>& a, const Polynomial<F>& b) {
    Polynomial<F> r = a;
    for (const auto& [e, c] : b.terms) add_term(K, r, e, c);
    return r;
}

template <class F>
Polynomial<F> poly_neg(const F& K, const Polynomial<F>& a) {
    Polynomial<F> r = a;
    for (auto& [e, c] : r.terms) c = K.neg(c);
    return r;
}

template <class F>
Polynomial<F> poly_sub(const F& K, const Polynomial<F>& a, const Polynomial<F>& b) {
    Polynomial<F> r = a;
    for (const auto& [e, c] : b.terms) add_term(K, r, e, K.neg(c));
    return r;
}

// r += m * c * g  (single monomial times polynomial, fused)
template <class F>
void poly_axpy(const F& K, Polynomial<F>& r, const Expv& m, const typename F::Elem& c,
               const Polynomial<F>& g) {
    for (const auto& [e, gc] : g.terms) add_term(K, r, expv_mul(m, e), K.mul(c, gc));
}

template <class F>
Polynomial<F> poly_mul(const F& K, const Polynomial<F>& a, const Polynomial<F>& b) {
    Polynomial<F> r;
    for (const auto& [e, c] : a.terms) poly_axpy(K, r, e, c, b);
    return r;
}

template <class F>
Polynomial<F> poly_scale(const F& K, const Polynomial<F>& a, const typename F::Elem& c) {
    Polynomial<F> r;
    for (const auto& [e, ac] : a.terms) add_term(K, r, e, K.mul(ac, c));
    return r;
}

template <class F>
Polynomial<F> poly_monic(const F& K, const Polynomial<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(K, a, K.inv(a.lead_coeff()));
}

template <class F>
bool poly_is_constant(const Polynomial<F>& a) {
    return !a.is_zero() && total_degree(a.lead_exp()) == 0;
}

// sum of squarefree monomials with unit coefficients
template <class F>
Polynomial<F> poly_from_monomials(const F& K, const std::vector<SquarefreeMonomial>& ms,
                                  std::size_t nvars) {
    Polynomial<F> p;
    for (const auto& m : ms) add_term(K, p, expv_of(m, nvars), K.one());
    return p;
}

// Canonical symbolic polynomials: exact rational coefficients.
using RatPoly = Polynomial<RationalField>;

template <class F>
Polynomial<F> to_field(const F& K, const RatPoly& p) {
    Polynomial<F> r;
    for (const auto& [e, c] : p.terms) r.terms.emplace(e, K.from_rational(c));
    // coefficients may vanish in positive characteristic
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = K.is_zero(it->second) ? r.terms.erase(it) : std::next(it);
    return r;
}

// "x1x3", "x3^2x4", aux slot prints as "t"; terms in decreasing lex on the
// exponent vectors (x1-first), coefficient prefixes only when not +-1.
template <class F>
std::string poly_to_text(const F& K, const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Expv, typename F::Elem>> ts(p.terms.begin(), p.terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(b.first.begin(), b.first.end(), a.first.begin(),
                                            a.first.end());
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ts) {
        std::string cs = K.to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? "-" : "+");
        first = false;
        std::string mono;
        for (std::size_t s = 0; s < e.size(); ++s) {
            if (e[s] == 0) continue;
            mono += (s + 1 == e.size()) ? "t" : "x" + std::to_string(s + 1);
            if (e[s] > 1) mono += "^" + std::to_string(e[s]);
        }
        if (mono.empty())
            out += cs;
        else
            out += (cs == "1" ? "" : cs) + mono;
    }
    return out;
}

}  // namespace lexrank
