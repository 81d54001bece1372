#ifndef GENTLE_REPORT_HPP
#define GENTLE_REPORT_HPP

#include <string>

#include "gentle/homology.hpp"
#include "gentle/quasi_tilted.hpp"
#include "gentle/quiver.hpp"
#include "gentle/rep_oracle.hpp"

namespace gentle {

struct OracleSummary {
    int checked = 0;
    int mismatches = 0;
};

/// Combinatorial (pd, id) versus the resolution oracle, over every
/// canonical string up to max_len, at the given prime.
OracleSummary oracle_check(HomologyContext& ctx, std::size_t max_len, int depth_cap,
                           const FieldSpec& field);

struct Report {
    std::string algebra;
    GentleReport gentle;
    // the remaining fields are meaningful only when gentle.is_gentle
    Dim gldim;
    int findim = 0;
    HbResult hb;
    std::string hb_witness;  // printed word
    BoundCheck hypotheses;
    QtVerdict quasi_tilted;
    std::string qt_witness;
    OracleSummary oracle;
};

/// Full report for a gentle input; for a non-gentle input only the gentle
/// block is populated.
Report build_report(const std::string& algebra_name, const BoundQuiver& bq,
                    std::size_t oracle_max_len = 6, int depth_cap = 10,
                    const FieldSpec& field = {});

/// Stable-key JSON with fixed field order; version key "spec": "1".
/// Non-gentle inputs serialize only {spec, algebra, gentle}.
std::string emit_report_json(const Report& report);

}  // namespace gentle

#endif
