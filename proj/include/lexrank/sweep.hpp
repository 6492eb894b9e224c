#pragma once

#include "lexrank/field.hpp"
#include "lexrank/groebner.hpp"
#include "lexrank/lexsegment.hpp"
#include "lexrank/stanley_reisner.hpp"
#include "lexrank/witness.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lexrank {

struct SweepOptions {
    int n_min = 3;
    int n_max = 6;
    std::vector<FieldSpec> fields = {FieldSpec::gf2()};
    // radical re-checks via Groebner for rows with ambient n up to these
    // bounds (0 disables); run in normalized coordinates
    int groebner_n_max = 0;       // primal certificates
    int dual_groebner_n_max = 0;  // dual witnesses
    FieldSpec groebner_field = FieldSpec::gfp(32003);
    int jobs = 1;
    enum class Format { csv, jsonl } format = Format::csv;
    int oracle_max_n = 12;
    std::size_t max_partitions = 5000;
};

// One row per ordered pair u >=lex v (degree 2); all oracle values live in
// the original ambient ring.
struct SweepRow {
    int n = 0;
    SquarefreeMonomial u, v;
    int shift = 0;
    WitnessCase wcase = WitnessCase::Single;
    std::size_t mu = 0;

    InvariantReport cf;  // closed form, ambient-corrected
    int cf_dual_pd = 0;
    OracleInvariants oracle;
    int oracle_dual_pd = 0;

    bool fields_agree = true;
    bool invariants_ok = true;
    bool terai_ok = true;
    bool cm_flag_ok = true;

    int sv_r = 0;
    std::string sv_verdict, grb_verdict;
    int dual_size = 0;
    std::string dual_method, dual_verdict, root_check;

    bool involution_ok = true, unmixed_ok = true, b1_ok = true;
    bool taylor_ok = true, skeleton_ok = true;

    std::string note;  // semicolon-joined failure reasons
    bool ok() const { return note.empty(); }
};

// All ordered pairs u >=lex v of degree-2 monomials for this n, u descending
// then v descending (deterministic row order).
std::vector<std::pair<SquarefreeMonomial, SquarefreeMonomial>> all_pairs(int n);

SweepRow evaluate_pair(int n, const SquarefreeMonomial& u, const SquarefreeMonomial& v,
                       const SweepOptions& opts);

struct SweepSummary {
    long rows = 0;
    long failures = 0;
    std::vector<std::string> notes;  // per-row failures and aggregate mismatches
};

// Streams one CSV/JSONL row per pair to out (deterministic bytes regardless
// of jobs); aggregate checks (oracle CM set == classification table per n)
// are appended to the summary.
SweepSummary run_sweep(const SweepOptions& opts, std::ostream& out);

std::string csv_header();
std::string csv_row(const SweepRow& r);
std::string jsonl_row(const SweepRow& r);

}  // namespace lexrank
