#pragma once

#include "lexrank/monomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lexrank {

// Edge ideal of the lexsegment {w squarefree, deg 2 : u >=lex w >=lex v} in
// K[x_1..x_n], kept in normalized coordinates: unused leading variables are
// stripped (shift = how many), so u = x_1 x_i always. v = x_j x_k with j < k,
// or j = 1, k = i for the single-generator segment u = v.
struct LexSegmentIdeal {
    int n = 0;       // normalized ambient
    int shift = 0;   // variables dropped below min(u)
    SquarefreeMonomial u, v;
    int i = 0, j = 0, k = 0;
    MonomialIdeal ideal{1};

    int ambient_n() const { return n + shift; }
    std::size_t mu() const { return ideal.mu(); }
    SquarefreeMonomial original_u() const { return shifted(u, shift, ambient_n()); }
    SquarefreeMonomial original_v() const { return shifted(v, shift, ambient_n()); }
    MonomialIdeal original_ideal() const { return shifted(ideal, shift, ambient_n()); }
};

// Generators of the segment, decreasing lex. Requires n >= 2, both degree 2,
// u >=lex v, and x_1 | u (normalized shape).
std::vector<SquarefreeMonomial> build_segment(int n, const SquarefreeMonomial& u,
                                              const SquarefreeMonomial& v);

// General entry point: validates, strips unused leading variables, builds the
// segment. Accepts any degree-2 pair with u >=lex v.
LexSegmentIdeal normalize(int n, const SquarefreeMonomial& u, const SquarefreeMonomial& v);

// Which arithmetical-rank witness construction applies (mutually exclusive,
// exhaustive over normalized segments).
enum class WitnessCase {
    Single,        // u = v
    J1,            // v = x_1 x_k: segment x_1*(x_i..x_k)
    PdN1,          // depth 1, witness by degree grouping, r = n-1
    Case1,         // j = i-1, staggered tableau with intercalated x_a x_n column
    Case2,         // 3 <= j <= i-2, i >= 5, tableau with cubic tail x_1 x_j x_m
    J2Taylor,      // j = 2, k < i: Taylor-minimal, singleton sets, r = mu
    J2BigRowI3,    // j = 2, k >= i, i = 3: two-row family
    J2BigRowIGt3,  // j = 2, k >= i, i > 3: two-row family
};

const char* witness_case_name(WitnessCase c);

struct SegmentClass {
    bool is_full = false;     // I_{n,2}
    bool is_initial = false;  // u = x_1 x_2
    bool is_final = false;    // v = x_{n-1} x_n
    bool is_single = false;   // u = v
    bool is_completely = false;  // completely lexsegment: j >= i-2
    WitnessCase witness_case = WitnessCase::Single;
};

SegmentClass classify(const LexSegmentIdeal& L);

struct InvariantReport {
    int dim = 0, depth = 0, projdim = 0, reg = 0, ara = 0, height = 0;
    bool cm = false, stci = false, linear_resolution = false;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// Closed-form invariants of S/I in the normalized ring K[x_1..x_n].
InvariantReport invariants(const LexSegmentIdeal& L);

// Same segment viewed in the original ambient ring (adds back free variables):
// dim and depth grow by shift, everything else is unchanged.
InvariantReport with_ambient_shift(InvariantReport r, int shift);

// All normalized pairs (u, v), u != v, whose segment ideal is Cohen-Macaulay,
// in deterministic order. Empty for n < 3.
std::vector<std::pair<SquarefreeMonomial, SquarefreeMonomial>> cm_classification_table(int n);

}  // namespace lexrank
