#pragma once

#include "lexrank/field.hpp"
#include "lexrank/groebner.hpp"
#include "lexrank/lexsegment.hpp"
#include "lexrank/monomial.hpp"
#include "lexrank/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexrank {

// Ordered family A_1, ..., A_r of finite monomial sets; the Schmitt-Vogel
// lemma turns it into r elements g_t = sum(A_t) with sqrt(g_1..g_r) = I when
//   SV1: |A_1| = 1
//   SV2: the sets cover all generators of I (and every element lies in I)
//   SV3: for t >= 2 and distinct m1, m2 in A_t some earlier element divides
//        m1*m2 (for squarefree m': supp m' inside supp m1 union supp m2).
struct SvFamily {
    std::vector<std::vector<SquarefreeMonomial>> sets;

    int r() const { return static_cast<int>(sets.size()); }
};

struct SvReport {
    bool ok = true;
    std::string reason;  // which condition failed and where
};

SvReport verify_sv(const SvFamily& family, const MonomialIdeal& I);

// Arithmetical-rank certificate for a segment ideal: the family, its target,
// and the verification verdict ("sv_verified", upgraded to
// "groebner_verified" by the radical re-check).
struct SvCertificate {
    MonomialIdeal target{1};
    SvFamily family;
    std::string verdict;

    int r() const { return family.r(); }
    std::vector<RatPoly> sums() const;             // in K[x_1..x_n, t]
    std::vector<std::string> sum_texts() const;    // "x1x4+x2x3", set order
};

// Witness in the segment's coordinates (relabel with shifted() for the
// original ambient ring). Throws logic_error if the constructed family were
// ever to fail its own verification or r != projdim.
SvCertificate sv_lex_witness(const LexSegmentIdeal& L);

SvCertificate shifted(const SvCertificate& cert, int shift, int new_n);

// Degree grouping A_l = all monomials of I of degree n-l+1 (l = 1..n-indeg+1);
// valid for every nonzero proper squarefree ideal.
SvFamily degree_grouping_family(const MonomialIdeal& I);

// ---- Alexander dual witnesses -------------------------------------------

enum class DualMethod { CiJ1, CmSearch, ThreeElement };

const char* dual_method_name(DualMethod m);

// Up to dual_projdim(L) polynomials with sqrt(polys) = I^*. For the
// three-element construction the components (f1, f2, Pi = x_{j+1}..x_k, x_j)
// are kept for the quadratic root identity.
struct DualWitness {
    DualMethod method = DualMethod::CiJ1;
    std::vector<RatPoly> polys;  // in K[x_1..x_n, t] of the segment's ring
    std::optional<RatPoly> f1, f2;
    std::optional<SquarefreeMonomial> pi;
    int xj = 0;
};

struct DualSearchOptions {
    // Groebner gate for the 2-element search: allow_groebner_fallback turns
    // on route (b) and the inline re-check of route (c); 0 partitions
    // disables route (b) entirely.
    FieldSpec field = FieldSpec::gfp(32003);
    GroebnerLimits limits{};
    std::size_t max_partitions = 5000;
    bool allow_groebner_fallback = true;
};

// Raised when the CM 2-element search exhausts both routes; what() carries
// the search log.
struct UnresolvedSearch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two polynomials f1, f2 with sqrt(f1, f2) = I_dual. Routes, in order:
//   (a) SV r=2 scan (f1 a single generator, f2 the sum of the rest);
//   (c) telescoping fold over the height-two prime decomposition, re-checked
//       by radical equality when the Groebner gate is open;
//   (b) exhaustive 2-partition search verified by Groebner radical equality.
// Throws UnresolvedSearch with the full log when every route fails.
std::pair<RatPoly, RatPoly> cm_pair(const MonomialIdeal& I_dual, const DualSearchOptions& opts);

DualWitness dual_witness(const LexSegmentIdeal& L, const DualSearchOptions& opts = {});

DualWitness shifted(const DualWitness& w, int shift, int new_n);

// Exact identity over Q: both x_j f2 and Pi f1 are roots of
// z^2 - (x_j f2 + Pi f1) z + (x_j f2)(Pi f1); vacuously true for other methods.
bool quadratic_root_check(const DualWitness& w);

}  // namespace lexrank
