// Acceptance suite: one line per criterion, itemized sub-checks, nonzero
// exit on any failure. The expected values are the recorded reference
// values for the bundled fixtures; items marked KNOWN-DISCREPANCY assert a
// reference value that the independent linear-algebra oracle contradicts
// (the oracle, the syzygy iteration, and the closed form agree with each
// other and against the reference value; see the inline notes).

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gentle/dsl.hpp"
#include "gentle/homology.hpp"
#include "gentle/quasi_tilted.hpp"
#include "gentle/report.hpp"

using namespace gentle;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".gq";
}

BoundQuiver fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_bound_quiver(buffer.str());
}

struct Suite {
    int criteria_failed = 0;
    int items = 0, failures = 0;
    std::vector<std::string> lines;

    void item(bool ok, const std::string& label, const std::string& detail = "") {
        ++items;
        if (!ok) ++failures;
        lines.push_back(std::string("    [") + (ok ? "ok" : "FAIL") + "] " + label +
                        (ok || detail.empty() ? "" : " -- " + detail));
    }

    void criterion(int number, const std::string& name, const std::function<void()>& body) {
        items = failures = 0;
        lines.clear();
        try {
            body();
        } catch (const std::exception& e) {
            item(false, "unexpected exception", e.what());
        }
        bool pass = failures == 0;
        if (!pass) ++criteria_failed;
        std::printf("criterion %2d %-28s %s (%d/%d checks)\n", number, name.c_str(),
                    pass ? "PASS" : "FAIL", items - failures, items);
        for (const std::string& line : lines) std::printf("%s\n", line.c_str());
    }
};

StringWord word(const BoundQuiver& bq, const std::string& text) { return parse_word(bq, text); }

std::map<std::string, int> by_name(const BoundQuiver& bq, const std::vector<int>& per_vertex) {
    std::map<std::string, int> out;
    for (int v = 0; v < bq.num_vertices(); ++v)
        if (per_vertex[v] != 0) out[bq.quiver().vertex_name(v)] = per_vertex[v];
    return out;
}

std::string dim_str(Dim d) { return d.str(); }

const std::vector<std::string> kFixtures{"a5-two-rel", "a5-one-rel", "double-a5", "kron-bridge",
                                         "fan", "pinwheel9", "pinwheel-ext"};

}  // namespace

int main() {
    Suite suite;

    suite.criterion(1, "gentle validation", [&] {
        for (const std::string& name : kFixtures) {
            GentleReport r = validate_gentle(fixture(name));
            std::string detail;
            for (const auto& v : r.violations) detail += std::string(to_string(v.code)) + " ";
            suite.item(r.is_gentle, "fixture " + name + " is gentle", detail);
        }
        struct Mutation {
            const char* label;
            std::string text;
            GentleViolationCode expected;
        };
        std::vector<Mutation> mutations{
            {"extra arrows breaking G1",
             "vertices 1 2 3 4 5 n1 n2\narrow a 1 2\narrow b 2 3\narrow c 3 4\narrow d 4 5\n"
             "arrow e1 n1 5\narrow e2 n2 5\nrel a b\nrel c d\n",
             GentleViolationCode::G1},
            {"shared-left-factor relations breaking G3",
             "vertices 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 2 4\nrel a b\nrel a c\n",
             GentleViolationCode::G3},
            {"two relation-free continuations breaking G2",
             "vertices 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 2 4\n",
             GentleViolationCode::G2},
            {"length-3 generator breaking G4",
             "vertices 1 2 3 4 5\narrow a 1 2\narrow b 2 3\narrow c 3 4\narrow d 4 5\n"
             "rel a b\nrel b c d\n",
             GentleViolationCode::G4},
            {"relation-free cycle breaking FD",
             "vertices 1 2\narrow a 1 2\narrow b 2 1\n", GentleViolationCode::FD},
        };
        for (const Mutation& m : mutations) {
            GentleReport r = validate_gentle(parse_bound_quiver(m.text));
            bool exactly = !r.is_gentle && !r.violations.empty();
            for (const auto& v : r.violations) exactly &= (v.code == m.expected);
            std::string got;
            for (const auto& v : r.violations) got += std::string(to_string(v.code)) + " ";
            suite.item(exactly, m.label, "violations: " + got);
        }
        bool parse_error = false;
        std::string msg;
        try {
            parse_bound_quiver("vertices 1 2 3\narrow a 1 2\narrow b 2 3\nrel b a\n");
        } catch (const ParseError& e) {
            parse_error = true;
            msg = e.message();
        }
        suite.item(parse_error && msg.find("not composable") != std::string::npos,
                   "non-composable rel is a parse error", msg);
    });

    suite.criterion(2, "global dimension", [&] {
        auto expect = [&](const std::string& name, Dim want) {
            Dim got = global_dimension(fixture(name));
            suite.item(got == want, "gl.dim " + name + " = " + dim_str(want),
                       "got " + dim_str(got));
        };
        expect("a5-two-rel", Dim(2));
        expect("kron-bridge", Dim(2));
        expect("fan", Dim(2));
        expect("a5-one-rel", Dim(2));
        expect("pinwheel9", Dim::infinite());
        expect("pinwheel-ext", Dim::infinite());
    });

    suite.criterion(3, "finitistic dimension", [&] {
        auto expect = [&](const std::string& name, int want) {
            int got = finitistic_dimension(fixture(name));
            suite.item(got == want, "f.dim " + name + " = " + std::to_string(want),
                       "got " + std::to_string(got));
        };
        expect("pinwheel9", 2);
        expect("pinwheel-ext", 2);
        expect("a5-two-rel", 2);
    });

    suite.criterion(4, "module dimensions", [&] {
        {
            BoundQuiver bq = fixture("a5-two-rel");
            HomologyContext ctx(bq);
            Dim pd = ctx.proj_dim(word(bq, "e(3)")), id = ctx.inj_dim(word(bq, "e(3)"));
            suite.item(pd == Dim(2) && id == Dim(2), "a5-two-rel S(3): pd = id = 2",
                       "got (" + dim_str(pd) + ", " + dim_str(id) + ")");
        }
        {
            BoundQuiver bq = fixture("pinwheel9");
            HomologyContext ctx(bq);
            Dim pd = ctx.proj_dim(word(bq, "e(4)")), id = ctx.inj_dim(word(bq, "e(4)"));
            suite.item(pd == Dim(1) && id == Dim(1), "pinwheel9 S(4): pd = id = 1",
                       "got (" + dim_str(pd) + ", " + dim_str(id) + ")");
            StringWord m = word(bq, "a41 a31^-1");
            Dim mpd = ctx.proj_dim(m), mid = ctx.inj_dim(m);
            suite.item(mpd == Dim(1), "pinwheel9 M(a41 a31^-1): pd = 1", "got " + dim_str(mpd));
            // KNOWN-DISCREPANCY: the reference value is 1, but the cosyzygy
            // runs E(1) -> E(6) -> E(9) (socle S(1), so the envelope is the
            // four-dimensional E(1)), giving 2; oracle and closed form agree.
            suite.item(mid == Dim(1), "pinwheel9 M(a41 a31^-1): id = 1 (reference)",
                       "got " + dim_str(mid) + "; oracle: " +
                           id_oracle(bq, string_rep(bq, m, {101}), 10, {101}).value.str());
        }
        {
            BoundQuiver bq = fixture("pinwheel-ext");
            HomologyContext ctx(bq);
            StringWord m = word(bq, "a31 a41^-1");  // dimension pattern (3 4 / 1)
            Dim pd = ctx.proj_dim(m), id = ctx.inj_dim(m);
            suite.item(pd == Dim(1) && id == Dim(2) && (pd + id) == Dim(3),
                       "pinwheel-ext (3 4 / 1): pd 1, id 2, sum 3",
                       "got (" + dim_str(pd) + ", " + dim_str(id) + ")");
        }
    });

    suite.criterion(5, "homological bound", [&] {
        {
            BoundQuiver bq = fixture("pinwheel9");
            HomologyContext ctx(bq);
            HbResult hb = ctx.hb_dim_exhaustive(20);
            // KNOWN-DISCREPANCY: the reference value is 2 with a strict
            // inequality; the mixed spoke strings have pd 1 + id 2 = 3
            // (= 2·f.dim - 1, attained), confirmed by the oracle.
            suite.item(hb.value == Dim(2), "hb.dim pinwheel9 = 2 (reference)",
                       "got " + dim_str(hb.value));
            suite.item(hb.value < Dim(2 * finitistic_dimension(bq) - 1),
                       "hb.dim pinwheel9 < 2 f.dim - 1 (reference, strict)",
                       "got " + dim_str(hb.value) + " vs 3");
        }
        {
            BoundQuiver bq = fixture("a5-two-rel");
            HomologyContext ctx(bq);
            HbResult hb = ctx.hb_dim_exhaustive(12);
            bool witness_s3 = hb.witness && hb.witness->kind == ModuleRef::Kind::String &&
                              hb.witness->word == word(bq, "e(3)");
            suite.item(hb.value == Dim(4) && witness_s3,
                       "hb.dim a5-two-rel = 4 with witness S(3)",
                       "got " + dim_str(hb.value));
        }
        for (const char* name : {"fan", "a5-one-rel", "double-a5"}) {
            BoundQuiver bq = fixture(name);
            HomologyContext ctx(bq);
            HbResult hb = ctx.hb_dim_exact();
            suite.item(hb.value <= Dim(3),
                       std::string("hb.dim ") + name + " <= 3 = 2 gl.dim - 1",
                       "got " + dim_str(hb.value));
        }
        for (const std::string& name : kFixtures) {
            BoundQuiver bq = fixture(name);
            HomologyContext ctx(bq);
            std::size_t covering = 2 * (2 * static_cast<std::size_t>(bq.num_arrows())) + 2;
            bool agree = ctx.hb_dim_exact().value == ctx.hb_dim_exhaustive(covering).value;
            suite.item(agree, "endpoint-exact mode agrees with exhaustive on " + name);
        }
    });

    suite.criterion(6, "bound inequality harness", [&] {
        int asserted = 0, violations = 0;
        for (const std::string& name : kFixtures) {
            BoundQuiver bq = fixture(name);
            if (!validate_gentle(bq).is_gentle) continue;
            BoundReport r = HomologyContext(bq).verify_bound();
            if (r.asserted) {
                ++asserted;
                if (!r.holds) ++violations;
            }
        }
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            BoundQuiver bq = random_gentle(seed, 8, 12);
            BoundReport r = HomologyContext(bq).verify_bound();
            if (r.asserted) {
                ++asserted;
                if (!r.holds) ++violations;
            }
        }
        suite.item(violations == 0,
                   "zero bound violations over fixtures and 500 random gentle pairs (" +
                       std::to_string(asserted) + " asserted)",
                   std::to_string(violations) + " violations");
    });

    suite.criterion(7, "band rule", [&] {
        for (const std::string& name : kFixtures) {
            BoundQuiver bq = fixture(name);
            for (const StringWord& band : enumerate_bands(bq, 8)) {
                for (std::uint32_t p : {std::uint32_t{101}, std::uint32_t{32003}}) {
                    LambdaIndependenceReport r = lambda_independence(bq, band, {p});
                    std::string detail;
                    for (const auto& f : r.failures) detail += f + "; ";
                    suite.item(r.all_one,
                               name + " band " + print_word(bq, band) + " p=" +
                                   std::to_string(p) + ": oracle pd = id = 1",
                               detail);
                }
            }
        }
    });

    suite.criterion(8, "oracle equivalence", [&] {
        for (const std::string& name : kFixtures) {
            BoundQuiver bq = fixture(name);
            HomologyContext ctx(bq);
            int checked = 0, mismatches = 0;
            for (std::uint32_t p : {std::uint32_t{101}, std::uint32_t{32003}}) {
                OracleSummary s = oracle_check(ctx, 6, 10, {p});
                checked += s.checked;
                mismatches += s.mismatches;
            }
            suite.item(mismatches == 0,
                       name + ": combinatorial = oracle on strings <= 6, both primes (" +
                           std::to_string(checked) + " checks)",
                       std::to_string(mismatches) + " mismatches");
        }
    });

    suite.criterion(9, "resolution adjudication", [&] {
        BoundQuiver bq = fixture("kron-bridge");
        StringWord m = word(bq, "b2 b1^-1 b2");
        FieldSpec field{101};
        Representation rep = string_rep(bq, m, field);
        // minimality is asserted inside every minimal_cover call
        OracleDim pd = pd_oracle(bq, rep, 10, field);
        OracleDim id = id_oracle(bq, rep, 10, field);
        auto top = by_name(bq, top_of(bq, rep, field));
        auto soc = by_name(bq, socle_of(bq, rep, field));
        suite.item(top == std::map<std::string, int>{{"2", 2}},
                   "cover P(2)^2: top multiset {2:2}");
        suite.item(soc == std::map<std::string, int>{{"3", 2}},
                   "envelope E(3)^2: socle multiset {3:2}");

        std::ifstream golden_in(std::string(FIXTURE_DIR) + "/golden/example-resolution.json");
        suite.item(golden_in.good(), "golden verdict file present");
        if (golden_in.good()) {
            nlohmann::json golden = nlohmann::json::parse(golden_in);
            suite.item(pd.value.is_finite() && golden["pd"] == pd.value.value(),
                       "oracle pd matches the recorded verdict",
                       "oracle " + pd.value.str());
            suite.item(id.value.is_finite() && golden["id"] == id.value.value(),
                       "oracle id matches the recorded verdict",
                       "oracle " + id.value.str());
            suite.item(golden["sum"] == pd.value.value() + id.value.value(),
                       "oracle pd + id matches the recorded verdict");
        }
        // the combinatorial route agrees with the oracle verdict
        HomologyContext ctx(bq);
        suite.item(ctx.proj_dim(m) == pd.value && ctx.inj_dim(m) == id.value,
                   "iteration agrees with the oracle on this module");
    });

    suite.criterion(10, "quasi-tilted", [&] {
        {
            HomologyContext ctx(fixture("fan"));
            QtVerdict v = is_quasi_tilted(ctx);
            suite.item(v.status == QtStatus::QuasiTilted && v.via_fast_path,
                       "fan: QuasiTilted via the strong-source fast path");
        }
        {
            BoundQuiver bq = fixture("a5-two-rel");
            HomologyContext ctx(bq);
            QtVerdict v = is_quasi_tilted(ctx);
            bool ok = v.status == QtStatus::NotQuasiTilted && v.witness &&
                      ctx.proj_dim(*v.witness) == Dim(2) && ctx.inj_dim(*v.witness) == Dim(2);
            suite.item(ok, "a5-two-rel: NotQuasiTilted with a (2,2) witness");
        }
        {
            HomologyContext ctx(fixture("a5-one-rel"));
            QtVerdict v = is_quasi_tilted(ctx);
            QtCrossCheck cc = qt_cross_check(ctx, 8);
            suite.item(v.status == QtStatus::QuasiTilted && cc.consistent && cc.all_within_bound,
                       "a5-one-rel: QuasiTilted, confirmed by the cross-check");
        }
        {
            BoundQuiver bq = fixture("double-a5");
            HomologyContext ctx(bq);
            QtVerdict v = is_quasi_tilted(ctx);
            QtCrossCheck cc = qt_cross_check(ctx, 8);
            // KNOWN-DISCREPANCY: the reference verdict is QuasiTilted, but
            // the pair is not gentle (G2), the string calculus is
            // off-contract, and both scan paths report a (2,2) witness.
            suite.item(v.status == QtStatus::QuasiTilted && cc.all_within_bound,
                       "double-a5: QuasiTilted confirmed by cross-check (reference)",
                       std::string("verdict ") +
                           (v.status == QtStatus::QuasiTilted ? "QuasiTilted" : "NotQuasiTilted") +
                           ", max pd+id = " + cc.max_sum.str());
        }
        int agreements = 0;
        bool all_agree = true;
        for (const std::string& name : kFixtures) {
            BoundQuiver bq = fixture(name);
            if (!(global_dimension(bq) == Dim(2))) continue;
            HomologyContext ctx(bq);
            QtCrossCheck cc = qt_cross_check(ctx, 8);
            ++agreements;
            all_agree &= cc.consistent;
        }
        suite.item(all_agree, "two-path agreement on the gl.dim-2 fixtures (" +
                                  std::to_string(agreements) + " fixtures)");
        int tested = 0, agreed = 0;
        for (std::uint64_t seed = 0; tested < 200 && seed < 20000; ++seed) {
            BoundQuiver bq = random_gentle(seed, 7, 10);
            if (!(global_dimension(bq) == Dim(2))) continue;
            ++tested;
            HomologyContext ctx(bq);
            if (qt_cross_check(ctx, 10).consistent) ++agreed;
        }
        suite.item(tested == 200 && agreed == tested,
                   "two-path agreement on 200 random gl.dim-2 gentle pairs",
                   std::to_string(agreed) + "/" + std::to_string(tested));
    });

    suite.criterion(11, "duality and locality", [&] {
        for (const std::string& name : kFixtures) {
            BoundQuiver bq = fixture(name);
            HomologyContext ctx(bq);
            HomologyContext op_ctx(opposite(bq));
            bool dual_ok = true;
            for (const StringWord& w : enumerate_strings(bq, 6))
                dual_ok &= ctx.inj_dim(w) == op_ctx.proj_dim(transport_to_opposite(w));
            suite.item(dual_ok, name + ": inj_dim = opposite-side proj_dim on strings <= 6");
        }
        for (const std::string& name : kFixtures) {
            BoundQuiver bq = fixture(name);
            HomologyContext ctx(bq);
            // KNOWN-DISCREPANCY (kron-bridge): the stated locality admits
            // no exceptions, but projective/injective strings of length
            // >= 2 sharing their end letters with longer strings violate
            // it (P(2) = c^-1 b1^-1 b2 has pd 0; the pumped word has pd 1).
            std::map<std::pair<Letter, Letter>, std::pair<Dim, Dim>> seen;
            int violations = 0;
            for (const StringWord& w : enumerate_strings(bq, 8)) {
                if (w.length() < 2) continue;
                auto key = std::make_pair(w.front(), w.back());
                auto dims = std::make_pair(ctx.proj_dim(w), ctx.inj_dim(w));
                auto [it, inserted] = seen.emplace(key, dims);
                if (!inserted && it->second != dims) ++violations;
            }
            suite.item(violations == 0,
                       name + ": end-letter locality of (pd, id), lengths 2..8 (as stated)",
                       std::to_string(violations) + " violating pairs");
        }
        for (const std::string& name : kFixtures) {
            BoundQuiver bq = fixture(name);
            HomologyContext ctx(bq);
            std::size_t covering = 2 * (2 * static_cast<std::size_t>(bq.num_arrows())) + 2;
            suite.item(ctx.hb_dim_exact().value == ctx.hb_dim_exhaustive(covering).value,
                       name + ": hb_dim endpoint-exact = exhaustive");
        }
    });

    std::printf("%s: %d of 11 criteria failed\n",
                suite.criteria_failed == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                suite.criteria_failed);
    return suite.criteria_failed == 0 ? 0 : 1;
}
