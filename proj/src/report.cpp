#include "gentle/report.hpp"

#include <json.hpp>

#include "gentle/dsl.hpp"

namespace gentle {

OracleSummary oracle_check(HomologyContext& ctx, std::size_t max_len, int depth_cap,
                           const FieldSpec& field) {
    OracleSummary summary;
    for (const StringWord& w : enumerate_strings(ctx.bq(), max_len)) {
        Representation rep = string_rep(ctx.bq(), w, field);
        OracleDim opd = pd_oracle(ctx.bq(), rep, depth_cap, field);
        OracleDim oid = id_oracle(ctx.bq(), rep, depth_cap, field);
        Dim cpd = ctx.proj_dim(w), cid = ctx.inj_dim(w);
        bool pd_ok = opd.at_least ? !cpd.is_finite() : cpd == opd.value;
        bool id_ok = oid.at_least ? !cid.is_finite() : cid == oid.value;
        ++summary.checked;
        if (!pd_ok || !id_ok) ++summary.mismatches;
    }
    return summary;
}

Report build_report(const std::string& algebra_name, const BoundQuiver& bq,
                    std::size_t oracle_max_len, int depth_cap, const FieldSpec& field) {
    Report report;
    report.algebra = algebra_name;
    report.gentle = validate_gentle(bq);
    if (!report.gentle.is_gentle) return report;
    HomologyContext ctx(bq);
    report.gldim = global_dimension(bq);
    report.findim = finitistic_dimension(bq);
    report.hb = ctx.hb_dim_exact();
    if (report.hb.witness) {
        const ModuleRef& m = *report.hb.witness;
        report.hb_witness = m.kind == ModuleRef::Kind::Band
                                ? "band " + print_word(bq, m.word)
                                : print_word(bq, m.word);
    }
    report.hypotheses = check_bound_hypotheses(bq);
    report.quasi_tilted = is_quasi_tilted(ctx);
    if (report.quasi_tilted.witness)
        report.qt_witness = print_word(bq, *report.quasi_tilted.witness);
    report.oracle = oracle_check(ctx, oracle_max_len, depth_cap, field);
    return report;
}

namespace {

const char* qt_status_name(QtStatus status) {
    switch (status) {
        case QtStatus::QuasiTilted: return "QuasiTilted";
        case QtStatus::NotQuasiTilted: return "NotQuasiTilted";
        case QtStatus::Hereditary: return "Hereditary";
        case QtStatus::NotApplicable: return "NotApplicable";
    }
    return "?";
}

}  // namespace

std::string emit_report_json(const Report& report) {
    nlohmann::ordered_json j;
    j["spec"] = "1";
    j["algebra"] = report.algebra;
    nlohmann::ordered_json gentle;
    gentle["ok"] = report.gentle.is_gentle;
    gentle["violations"] = nlohmann::ordered_json::array();
    for (const GentleViolation& v : report.gentle.violations) {
        nlohmann::ordered_json item;
        item["code"] = to_string(v.code);
        item["witness"] = v.witness;
        item["message"] = v.message;
        gentle["violations"].push_back(item);
    }
    j["gentle"] = gentle;
    if (!report.gentle.is_gentle) return j.dump(2) + "\n";

    nlohmann::ordered_json gldim;
    gldim["finite"] = report.gldim.is_finite();
    if (report.gldim.is_finite()) gldim["value"] = report.gldim.value();
    j["gldim"] = gldim;
    j["findim"] = report.findim;
    nlohmann::ordered_json hb;
    hb["finite"] = report.hb.value.is_finite();
    if (report.hb.value.is_finite()) hb["value"] = report.hb.value.value();
    hb["witness"] = report.hb_witness;
    hb["exact"] = report.hb.exact;
    j["hbdim"] = hb;
    nlohmann::ordered_json hyp;
    hyp["sources_ok"] = report.hypotheses.sources_ok;
    hyp["sinks_ok"] = report.hypotheses.sinks_ok;
    j["hypotheses"] = hyp;
    nlohmann::ordered_json qt;
    qt["status"] = qt_status_name(report.quasi_tilted.status);
    if (report.quasi_tilted.witness) qt["witness"] = report.qt_witness;
    j["quasi_tilted"] = qt;
    nlohmann::ordered_json oracle;
    oracle["checked"] = report.oracle.checked;
    oracle["mismatches"] = report.oracle.mismatches;
    j["oracle"] = oracle;
    return j.dump(2) + "\n";
}

}  // namespace gentle
