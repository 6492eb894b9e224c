#pragma once

#include "lexrank/field.hpp"
#include "lexrank/monomial.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace lexrank {

// Stanley-Reisner complex of a squarefree monomial ideal: faces are the
// subsets of [n] containing no generator's support. Facets as bitmasks,
// sorted ascending as integers (deterministic).
struct SimplicialComplex {
    int n = 0;
    std::vector<std::uint64_t> facets;
};

// Throws for the unit ideal (empty complex has no Stanley-Reisner ring here).
SimplicialComplex complex_of(const MonomialIdeal& I);

// Minimal primes of I = complements of facets, each sorted ascending,
// the list sorted lexicographically. height(I) = smallest size.
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I);
int height_of(const MonomialIdeal& I);

// Connectivity of the 1-skeleton of the Stanley-Reisner complex (all n
// vertices are present as vertices even if some are in no face of dim > 0
// -- pre: I has no degree <= 1 generator so every singleton is a face).
bool skeleton1_connected(const MonomialIdeal& I);

// Every generator has a "private" variable dividing no other generator
// (Taylor complex is then the minimal free resolution).
bool taylor_minimal(const MonomialIdeal& I);

struct BettiTable {
    std::string field;                                // tag, e.g. "gf2"
    std::map<std::pair<int, int>, long long> entries; // (i, d) -> beta_{i,d}, nonzero only

    long long beta(int i, int d) const;
    long long total(int i) const;  // sum over d of beta_{i,d}
    int projdim() const;           // max homological degree i
    // reg(I) = max{d - i : beta_{i,d} != 0, i >= 1} + 1 (reg of the ideal,
    // = reg(S/I) + 1); returns 1 when S/I = S.
    int reg_ideal() const;
};

// Betti numbers of S/I over the given field via Hochster's formula,
// computed from scratch by ranks of simplicial boundary maps. beta_{0,0} = 1.
// Refuses n > max_n (cost grows as 3^n).
BettiTable hochster_betti(const MonomialIdeal& I, const FieldSpec& field, int max_n = 12);

struct OracleInvariants {
    int dim = 0, depth = 0, projdim = 0, reg = 0, height = 0;

    friend bool operator==(const OracleInvariants&, const OracleInvariants&) = default;
};

// dim from facets, height from minimal primes, projdim/reg from the Betti
// table, depth = n - projdim.
OracleInvariants oracle_invariants(const MonomialIdeal& I, const FieldSpec& field, int max_n = 12);

}  // namespace lexrank
