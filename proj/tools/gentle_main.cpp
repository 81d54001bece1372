#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gentle/dsl.hpp"
#include "gentle/homology.hpp"
#include "gentle/quasi_tilted.hpp"
#include "gentle/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotGentle = 2;
constexpr int kExitCap = 3;
constexpr int kExitOracle = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gentle::ParseError({}, "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

gentle::BoundQuiver load(const std::string& path) {
    return gentle::parse_bound_quiver(read_file(path));
}

/// Loads and insists on a gentle pair (exit 2 otherwise).
gentle::BoundQuiver load_gentle(const std::string& path) {
    gentle::BoundQuiver bq = load(path);
    gentle::GentleReport report = gentle::validate_gentle(bq);
    if (!report.is_gentle) {
        for (const auto& v : report.violations)
            std::cerr << gentle::to_string(v.code) << ": " << v.message << "\n";
        std::exit(kExitNotGentle);
    }
    return bq;
}

void print_dim(const char* label, gentle::Dim d) {
    std::cout << label << (d.is_finite() ? std::to_string(d.value()) : "infinite") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological invariants of gentle algebras presented by bound quivers"};
    app.require_subcommand(1);

    std::string file, word_text, band_text;
    int band_n = 1;
    std::size_t max_len = 12;
    bool exact_mode = false, json_out = false;
    int depth_cap = 10;
    std::uint32_t prime = 101, second_prime = 32003;
    std::size_t oracle_max_len = 6;

    auto* validate = app.add_subcommand("validate", "check the gentle axioms");
    validate->add_option("file", file)->required();

    auto* gldim = app.add_subcommand("gldim", "global dimension");
    gldim->add_option("file", file)->required();

    auto* findim = app.add_subcommand("findim", "finitistic dimension");
    findim->add_option("file", file)->required();

    auto* dims = app.add_subcommand("dims", "projective/injective dimensions of a module");
    dims->add_option("file", file)->required();
    auto* opt_string = dims->add_option("--string", word_text, "string word, e.g. \"b2 b1^-1 b2\"");
    auto* opt_band = dims->add_option("--band", band_text, "band word");
    dims->add_option("--n", band_n, "band Jordan block size");
    opt_string->excludes(opt_band);

    auto* hbdim = app.add_subcommand("hbdim", "homological bound");
    hbdim->add_option("file", file)->required();
    hbdim->add_option("--max-len", max_len, "exhaustive enumeration length");
    hbdim->add_flag("--exact", exact_mode, "exact end-pair mode");
    std::size_t enum_cap = 2'000'000;
    hbdim->add_option("--cap", enum_cap, "enumeration size cap");

    auto* qt = app.add_subcommand("quasi-tilted", "quasi-tilted decision");
    qt->add_option("file", file)->required();

    auto* report_cmd = app.add_subcommand("report", "full machine-readable report");
    report_cmd->add_option("file", file)->required();
    report_cmd->add_flag("--json", json_out, "emit JSON (always on; kept for symmetry)");

    auto* oracle_cmd = app.add_subcommand("oracle-check",
                                          "combinatorial dims vs. resolution oracle");
    oracle_cmd->add_option("file", file)->required();
    oracle_cmd->add_option("--max-len", oracle_max_len, "string length bound");
    oracle_cmd->add_option("--depth-cap", depth_cap, "resolution depth cap");
    oracle_cmd->add_option("--prime", prime, "field characteristic");
    oracle_cmd->add_option("--second-prime", second_prime, "re-run characteristic");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            gentle::BoundQuiver bq = load(file);
            gentle::GentleReport report = gentle::validate_gentle(bq);
            if (report.is_gentle) {
                std::cout << "gentle\n";
                return kExitOk;
            }
            for (const auto& v : report.violations)
                std::cout << gentle::to_string(v.code) << ": " << v.message << "\n";
            return kExitNotGentle;
        }
        if (gldim->parsed()) {
            print_dim("gl.dim = ", gentle::global_dimension(load_gentle(file)));
            return kExitOk;
        }
        if (findim->parsed()) {
            std::cout << "f.dim = " << gentle::finitistic_dimension(load_gentle(file)) << "\n";
            return kExitOk;
        }
        if (dims->parsed()) {
            gentle::BoundQuiver bq = load_gentle(file);
            gentle::HomologyContext ctx(bq);
            gentle::ModuleRef m = gentle::ModuleRef::simple_at(0);
            if (!word_text.empty()) {
                m = gentle::ModuleRef::string(gentle::parse_word(bq, word_text));
                gentle::StringCheck check = gentle::is_valid_string(bq, m.word);
                if (!check.ok) {
                    std::cerr << "not a valid string (axiom S"
                              << (check.violated == gentle::StringAxiom::S1   ? 1
                                  : check.violated == gentle::StringAxiom::S2 ? 2
                                                                              : 3)
                              << " at index " << check.index << ")\n";
                    return kExitParse;
                }
            } else if (!band_text.empty()) {
                gentle::StringWord w = gentle::parse_word(bq, band_text);
                gentle::BandCheck bc = gentle::is_band(bq, w);
                if (!bc.is_band) {
                    std::cerr << "not a band: " << bc.reason << "\n";
                    return kExitParse;
                }
                m = gentle::ModuleRef::band(gentle::canonical_band(bq, w).word, band_n);
            } else {
                std::cerr << "dims: one of --string / --band is required\n";
                return kExitParse;
            }
            gentle::HomReport r = ctx.dims(m);
            print_dim("pd = ", r.pd);
            print_dim("id = ", r.id);
            print_dim("sum = ", r.sum);
            std::cout << "method = " << r.method << "\n";
            return kExitOk;
        }
        if (hbdim->parsed()) {
            gentle::BoundQuiver bq = load_gentle(file);
            gentle::HomologyContext ctx(bq);
            gentle::HbResult hb =
                exact_mode ? ctx.hb_dim_exact() : ctx.hb_dim_exhaustive(max_len, enum_cap);
            print_dim("hb.dim = ", hb.value);
            if (hb.witness) {
                const auto& m = *hb.witness;
                std::cout << "witness = "
                          << (m.kind == gentle::ModuleRef::Kind::Band ? "band " : "")
                          << gentle::print_word(bq, m.word) << "\n";
            }
            std::cout << "exact = " << (hb.exact ? "true" : "false") << "\n";
            return kExitOk;
        }
        if (qt->parsed()) {
            gentle::BoundQuiver bq = load_gentle(file);
            gentle::HomologyContext ctx(bq);
            gentle::QtVerdict verdict = gentle::is_quasi_tilted(ctx);
            switch (verdict.status) {
                case gentle::QtStatus::QuasiTilted: std::cout << "QuasiTilted\n"; break;
                case gentle::QtStatus::Hereditary: std::cout << "Hereditary\n"; break;
                case gentle::QtStatus::NotApplicable:
                    std::cout << "NotApplicable: " << verdict.reason << "\n";
                    break;
                case gentle::QtStatus::NotQuasiTilted:
                    std::cout << "NotQuasiTilted witness "
                              << gentle::print_word(bq, *verdict.witness) << "\n";
                    break;
            }
            return kExitOk;
        }
        if (report_cmd->parsed()) {
            gentle::BoundQuiver bq = load(file);
            std::string name = std::filesystem::path(file).stem().string();
            gentle::Report report = gentle::build_report(name, bq);
            std::cout << gentle::emit_report_json(report);
            return report.gentle.is_gentle ? kExitOk : kExitNotGentle;
        }
        if (oracle_cmd->parsed()) {
            gentle::BoundQuiver bq = load_gentle(file);
            gentle::HomologyContext ctx(bq);
            int mismatches = 0, checked = 0;
            for (std::uint32_t p : {prime, second_prime}) {
                gentle::OracleSummary s =
                    gentle::oracle_check(ctx, oracle_max_len, depth_cap, {p});
                std::cout << "p=" << p << " checked=" << s.checked
                          << " mismatches=" << s.mismatches << "\n";
                mismatches += s.mismatches;
                checked += s.checked;
            }
            std::cout << (mismatches == 0 ? "agreement" : "DISAGREEMENT") << " (" << checked
                      << " checks)\n";
            return mismatches == 0 ? kExitOk : kExitOracle;
        }
    } catch (const gentle::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const gentle::EnumerationCapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
