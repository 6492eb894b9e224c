#pragma once

#include "lexrank/duality.hpp"
#include "lexrank/lexsegment.hpp"
#include "lexrank/monomial.hpp"
#include "lexrank/stanley_reisner.hpp"
#include "lexrank/witness.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace lexrank {

using Json = nlohmann::ordered_json;

Json monomial_to_json(const SquarefreeMonomial& m);              // [1,3]
SquarefreeMonomial monomial_from_json(const Json& j, int n);

Json ideal_to_json(const MonomialIdeal& I);                      // {"n":5,"gens":[[1,3],...]}
MonomialIdeal ideal_from_json(const Json& j);

// {"n":5,"u":[1,3],"v":[2,4],"dim":...,"class":"J2_BIGROW_I3"} -- invariants
// in the original ambient ring, class of the normalized segment.
Json invariant_report_json(int ambient_n, const SquarefreeMonomial& u,
                           const SquarefreeMonomial& v, const InvariantReport& rep,
                           WitnessCase witness_case, int shift);

Json betti_table_json(const BettiTable& T);

Json certificate_to_json(const SvCertificate& cert);
SvCertificate certificate_from_json(const Json& j);  // verdict re-checked by callers

Json polynomial_to_json(const RatPoly& p);           // [{"coeff":"1","exps":[...]}, ...]
RatPoly polynomial_from_json(const Json& j);

Json dual_witness_to_json(const DualWitness& w, int dual_pd);

}  // namespace lexrank
