#include "lexrank/duality.hpp"

#include "lexrank/stanley_reisner.hpp"

#include <stdexcept>

namespace lexrank {

namespace {

// Enumerate transversals: branch on each vertex of the first uncovered
// support. Every minimal transversal is reached; non-minimal byproducts are
// discarded by the antichain reduction afterwards.
void cover_search(const std::vector<std::uint64_t>& supports, std::uint64_t chosen,
                  std::vector<std::uint64_t>& out) {
    const std::uint64_t* uncovered = nullptr;
    for (const auto& s : supports)
        if ((s & chosen) == 0) { uncovered = &s; break; }
    if (!uncovered) {
        out.push_back(chosen);
        return;
    }
    for (std::uint64_t m = *uncovered; m != 0; m &= m - 1) {
        std::uint64_t bit = m & (~m + 1);
        cover_search(supports, chosen | bit, out);
    }
}

}  // namespace

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    if (I.is_zero())
        throw std::invalid_argument("alexander_dual: zero ideal has no dual");
    if (I.is_unit())
        throw std::invalid_argument("alexander_dual: unit ideal has no dual");
    std::vector<std::uint64_t> supports;
    supports.reserve(I.mu());
    for (const auto& g : I.gens()) supports.push_back(g.mask());

    std::vector<std::uint64_t> covers;
    cover_search(supports, 0, covers);

    std::vector<SquarefreeMonomial> gens;
    gens.reserve(covers.size());
    for (std::uint64_t c : covers) gens.push_back(SquarefreeMonomial::from_mask(I.n(), c));
    return MonomialIdeal(I.n(), std::move(gens));
}

int dual_projdim(const LexSegmentIdeal& L) {
    return (L.j >= 2 && L.i >= L.j + 2 && L.k != L.n) ? 3 : 2;
}

DualPresentation dual_presentation(const LexSegmentIdeal& L) {
    DualPresentation P{{}, alexander_dual(L.ideal)};
    for (const auto& g : L.ideal.gens()) {
        auto vs = g.vars();
        P.primes.emplace_back(vs[0], vs[1]);
    }
    return P;
}

bool terai_check(const LexSegmentIdeal& L, const FieldSpec& field, int max_n) {
    auto dual = alexander_dual(L.ideal);
    int pd_dual = hochster_betti(dual, field, max_n).projdim();
    int reg_I = hochster_betti(L.ideal, field, max_n).reg_ideal();
    return pd_dual == reg_I && pd_dual == dual_projdim(L);
}

}  // namespace lexrank
