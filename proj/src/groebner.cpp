#include "lexrank/groebner.hpp"

#include <bit>

namespace lexrank {

namespace {

std::uint64_t used_var_mask(const std::vector<RatPoly>& polys) {
    std::uint64_t used = 0;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms)
            for (std::size_t s = 0; s + 1 < e.size(); ++s)  // x-slots only
                if (e[s] != 0) used |= std::uint64_t{1} << s;
    return used;
}

void check_var_limit(const std::vector<RatPoly>& polys, const GroebnerLimits& limits) {
    int used = std::popcount(used_var_mask(polys));
    if (used + 1 > limits.max_vars)
        throw GroebnerLimitError("groebner: " + std::to_string(used) +
                                 " variables plus t exceeds limit " +
                                 std::to_string(limits.max_vars));
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms)
            if (!e.empty() && e.back() != 0)
                throw std::invalid_argument("groebner: input uses the reserved t slot");
}

template <class F>
bool radical_member_impl(const F& K, const RatPoly& f, const std::vector<RatPoly>& gens,
                         const GroebnerLimits& limits) {
    if (gens.empty()) return false;
    const std::size_t nvars = f.terms.begin()->first.size();  // f is nonzero here
    std::vector<Polynomial<F>> input;
    input.reserve(gens.size() + 1);
    for (const auto& g : gens) input.push_back(to_field(K, g));
    // 1 - t f
    Expv t(nvars, 0);
    t.back() = 1;
    Polynomial<F> rab = poly_const(K, K.one(), nvars);
    for (const auto& [e, c] : f.terms)
        add_term(K, rab, expv_mul(t, e), K.neg(K.from_rational(c)));
    input.push_back(std::move(rab));
    return buchberger(K, std::move(input), limits).is_unit();
}

}  // namespace

int count_used_vars(const std::vector<RatPoly>& polys) {
    return std::popcount(used_var_mask(polys));
}

bool radical_member(const RatPoly& f, const std::vector<RatPoly>& gens, const FieldSpec& field,
                    const GroebnerLimits& limits) {
    if (f.is_zero()) return true;
    auto all = gens;
    all.push_back(f);
    check_var_limit(all, limits);
    return with_field(field, [&](auto K) { return radical_member_impl(K, f, gens, limits); });
}

bool radical_equals_ideal(const std::vector<RatPoly>& polys, const MonomialIdeal& I,
                          const FieldSpec& field, const GroebnerLimits& limits,
                          std::string* why) {
    const std::size_t nvars = static_cast<std::size_t>(I.n()) + 1;
    RationalField Q;

    // containment: terms of each poly must individually lie in I
    for (std::size_t p = 0; p < polys.size(); ++p) {
        for (const auto& [e, c] : polys[p].terms) {
            if (e.size() != nvars)
                throw std::invalid_argument("radical_equals_ideal: ring size mismatch");
            if (e.back() != 0) {
                if (why) *why = "containment: poly #" + std::to_string(p) + " uses t";
                return false;
            }
            std::uint64_t support = 0;
            for (std::size_t s = 0; s + 1 < e.size(); ++s)
                if (e[s] != 0) support |= std::uint64_t{1} << s;
            if (!I.contains_support(support)) {
                if (why)
                    *why = "containment: term " +
                           poly_to_text(Q, poly_monomial(Q, e, Rational(1))) + " of poly #" +
                           std::to_string(p) + " is outside the ideal";
                return false;
            }
        }
    }

    // radical membership of every generator
    for (const auto& g : I.gens()) {
        RatPoly gp = poly_from_monomials(Q, {g}, nvars);
        if (!radical_member(gp, polys, field, limits)) {
            if (why) *why = "membership: " + g.str() + " not in the radical";
            return false;
        }
    }
    return true;
}

}  // namespace lexrank
