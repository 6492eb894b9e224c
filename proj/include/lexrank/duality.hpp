#pragma once

#include "lexrank/field.hpp"
#include "lexrank/lexsegment.hpp"
#include "lexrank/monomial.hpp"

#include <utility>
#include <vector>

namespace lexrank {

// Alexander dual of a squarefree monomial ideal: generators are the minimal
// transversals (vertex covers) of the generator supports. Throws for the
// zero ideal. alexander_dual is an involution on proper nonzero ideals.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

// Closed form for projdim(S/I^*) = reg(I) of a lexsegment edge ideal:
// 3 iff j >= 2, i >= j+2 and k != n; else 2.
int dual_projdim(const LexSegmentIdeal& L);

// I^* presented with the minimal primes of I alongside (supports of the
// generators of I are exactly the minimal primes of I^*).
struct DualPresentation {
    std::vector<std::pair<int, int>> primes;  // edges of I = minimal primes of I^*
    MonomialIdeal dual_gens;
};

DualPresentation dual_presentation(const LexSegmentIdeal& L);

// Oracle cross-check of Terai's identity on this segment:
// projdim(S/I^*) (Hochster on I^*) == reg(I) (Hochster on I) == dual_projdim.
bool terai_check(const LexSegmentIdeal& L, const FieldSpec& field, int max_n = 12);

}  // namespace lexrank
