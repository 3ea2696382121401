// mcgcalc: command-line front end for the twist-word calculus, the fibration
// families and their invariants, spinal open book rewrites, and plumbing
// graphs.
//
// Exit codes: 0 success, 1 domain error, 2 usage error; `verify` exits 0 on
// Verified, 3 on Refuted, 4 on Indeterminate.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcg/dsl.hpp"
#include "mcg/json_io.hpp"
#include "mcg/lefschetz.hpp"
#include "mcg/plumbing.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string strip(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

struct FamilyArgs {
    long long g = 2, h = 1, n = 0, m = 1;
    bool json = false;
};

void print_report_text(const mcg::InvariantReport& report, const mcg::Factorization& fact) {
    std::cout << "M            = " << report.M << "\n";
    std::cout << "e            = " << report.euler << "\n";
    if (report.signature) std::cout << "sigma        = " << *report.signature << "\n";
    if (report.c1_squared) std::cout << "c1^2         = " << *report.c1_squared << "\n";
    if (report.c2) std::cout << "c2           = " << *report.c2 << "\n";
    std::cout << "hyperelliptic = " << (report.hyperelliptic ? "yes" : "no") << "\n";
    std::cout << "section       = " << fact.section_self_intersection << "\n";
    std::cout << "t_delta power = " << fact.boundary_twist_power << "\n";
    std::cout << "cycles        = " << fact.vanishing_cycles.size() << "\n";
    std::cout << "commutators   = " << fact.commutator_blocks.size() << "\n";
    std::cout << "word          = " << mcg::print_word(fact.word) << "\n";
}

int run_family(const FamilyArgs& args) {
    mcg::InvariantReport report = mcg::family_invariants(args.g, args.h, args.n, args.m);
    mcg::Factorization fact = mcg::build_factorization(args.g, args.h, args.n, args.m);
    if (args.json) {
        mcg::Json j = mcg::report_to_json(report);
        j["factorization"] = mcg::factorization_to_json(fact);
        std::cout << j.dump(2) << "\n";
    } else {
        print_report_text(report, fact);
    }
    return 0;
}

struct TableArgs {
    long long g = 2, h = 1, n = 0, m_max = 5;
    bool json = false;
};

int run_table(const TableArgs& args) {
    mcg::Json rows = mcg::Json::array();
    for (long long m = 0; m <= args.m_max; ++m) {
        mcg::InvariantReport r = mcg::family_invariants(args.g, args.h, args.n, m);
        long long e_excised = r.euler - 3 + 2 * (args.g + args.h);
        mcg::Json row{{"m", mcg::encode_int(m)},
                      {"M", mcg::encode_int(r.M)},
                      {"e", mcg::encode_int(r.euler)}};
        if (r.signature) row["sigma"] = mcg::encode_int(*r.signature);
        if (r.c1_squared) row["c1_squared"] = mcg::encode_int(*r.c1_squared);
        row["e_excised"] = mcg::encode_int(e_excised);
        rows.push_back(std::move(row));
    }
    if (args.json) {
        mcg::Json j{{"schema", "familytable/1"},
                    {"g", mcg::encode_int(args.g)},
                    {"h", mcg::encode_int(args.h)},
                    {"n", mcg::encode_int(args.n)},
                    {"rows", std::move(rows)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    const bool with_sigma = args.g == 2;
    std::cout << std::setw(4) << "m" << std::setw(8) << "M" << std::setw(8) << "e";
    if (with_sigma) std::cout << std::setw(8) << "sigma" << std::setw(8) << "c1^2";
    std::cout << std::setw(10) << "e(exc)" << "\n";
    for (const auto& row : rows) {
        std::cout << std::setw(4) << mcg::decode_int(row.at("m")) << std::setw(8)
                  << mcg::decode_int(row.at("M")) << std::setw(8) << mcg::decode_int(row.at("e"));
        if (with_sigma)
            std::cout << std::setw(8) << mcg::decode_int(row.at("sigma")) << std::setw(8)
                      << mcg::decode_int(row.at("c1_squared"));
        std::cout << std::setw(10) << mcg::decode_int(row.at("e_excised")) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string lhs_path, rhs_path;
    long long genus = 2;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    mcg::TwistWord lhs = mcg::parse_word(strip(read_file(args.lhs_path)));
    mcg::TwistWord rhs = mcg::parse_word(strip(read_file(args.rhs_path)));
    mcg::CurveModel model = mcg::standard_model(args.genus);
    mcg::Verdict verdict = mcg::certify_relation(lhs, rhs, model);
    if (args.json) {
        std::cout << mcg::verdict_to_json(verdict).dump(2) << "\n";
    } else {
        switch (verdict.kind) {
            case mcg::VerdictKind::Verified:
                std::cout << "Verified\n";
                break;
            case mcg::VerdictKind::Refuted: {
                std::cout << "Refuted; witness vector (";
                const auto& w = verdict.witness->coefficients();
                for (std::size_t i = 0; i < w.size(); ++i)
                    std::cout << (i ? "," : "") << w[i];
                std::cout << ")\n";
                break;
            }
            case mcg::VerdictKind::Indeterminate: {
                std::cout << "Indeterminate; opaque blocks:";
                for (const auto& l : verdict.opaque_labels) std::cout << " " << l;
                std::cout << "\n";
                break;
            }
        }
    }
    if (verdict.kind == mcg::VerdictKind::Refuted) return 3;
    if (verdict.kind == mcg::VerdictKind::Indeterminate) return 4;
    return 0;
}

struct TapArgs {
    std::string book_path, spec_path;
};

int run_tap(const TapArgs& args) {
    mcg::SpinalOpenBook book =
        mcg::book_from_json(mcg::Json::parse(read_file(args.book_path)));
    mcg::TapSpec spec = mcg::tap_spec_from_json(mcg::Json::parse(read_file(args.spec_path)));
    mcg::TapResult result = mcg::spinal_tap(book, spec);
    mcg::Json j{{"schema", "tapresult/1"},
                {"book", mcg::book_to_json(result.book)},
                {"account", mcg::account_to_json(result.account)},
                {"inverse_fold", mcg::fold_spec_to_json(result.inverse)}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct PlumbingArgs {
    long long g = 2, h = 1, n = 0;
    long long k = 1, l = 1;
    std::vector<long long> framings;
};

int run_plumbing(const PlumbingArgs& args) {
    mcg::PlumbingGraph graph;
    if (args.k == 1 && args.l == 1 && args.framings.empty()) {
        graph = mcg::build_Y(args.g, args.h, args.n);
    } else {
        std::vector<long long> framings = args.framings;
        if (framings.empty()) framings.assign(args.l, args.n);
        graph = mcg::build_generalized(args.k, args.l, args.g, args.h, framings);
    }
    mcg::Json j = mcg::plumbing_to_json(graph);
    j["linking_matrix"] = mcg::Json::array();
    for (const auto& row : mcg::linking_matrix(graph)) {
        mcg::Json jrow = mcg::Json::array();
        for (long long v : row) jrow.push_back(mcg::encode_int(v));
        j["linking_matrix"].push_back(std::move(jrow));
    }
    j["first_homology"] = mcg::homology_to_json(mcg::first_homology(graph));
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dehn twist word calculus, Lefschetz fibration families, spinal open books, "
                 "and plumbing graphs"};
    app.require_subcommand(1);
    // --h is a domain flag below, so help is long-form only.
    app.set_help_flag("--help", "print help");

    FamilyArgs family;
    auto* family_cmd = app.add_subcommand("family", "invariants and factorization of one family member");
    family_cmd->add_option("--g", family.g, "fiber genus (>= 2)")->required();
    family_cmd->add_option("--h", family.h, "base genus (>= 1)")->required();
    family_cmd->add_option("--n", family.n, "section self-intersection (<= 2h-2)")->required();
    family_cmd->add_option("--m", family.m, "twist parameter (>= 0)")->required();
    family_cmd->add_flag("--json", family.json, "emit JSON");

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "invariant table for m = 0..m-max");
    table_cmd->add_option("--g", table.g, "fiber genus (>= 2)")->required();
    table_cmd->add_option("--h", table.h, "base genus (>= 1)")->required();
    table_cmd->add_option("--n", table.n, "section self-intersection (<= 2h-2)")->required();
    table_cmd->add_option("--m-max", table.m_max, "largest twist parameter")->required();
    table_cmd->add_flag("--json", table.json, "emit JSON");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "certify a relation at the symplectic level");
    verify_cmd->add_option("--lhs", verify.lhs_path, "file with the left word")->required();
    verify_cmd->add_option("--rhs", verify.rhs_path, "file with the right word")->required();
    verify_cmd->add_option("--genus", verify.genus, "genus of the standard model")->required();
    verify_cmd->add_flag("--json", verify.json, "emit JSON");

    TapArgs tap;
    auto* tap_cmd = app.add_subcommand("tap", "spinal tap on a book");
    tap_cmd->add_option("--book", tap.book_path, "spinal open book JSON file")->required();
    tap_cmd->add_option("--spec", tap.spec_path, "tap spec JSON file")->required();

    PlumbingArgs plumbing;
    auto* plumbing_cmd = app.add_subcommand("plumbing", "plumbing graph and first homology");
    plumbing_cmd->add_option("--g", plumbing.g, "top genus (>= 2)")->required();
    plumbing_cmd->add_option("--h", plumbing.h, "bottom genus (>= 1)")->required();
    plumbing_cmd->add_option("--n", plumbing.n, "bottom euler number")->required();
    plumbing_cmd->add_option("--k", plumbing.k, "copies of the top vertex");
    plumbing_cmd->add_option("--l", plumbing.l, "copies of the bottom vertex");
    plumbing_cmd->add_option("--framings", plumbing.framings, "bottom framings r_1,...,r_l")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (family_cmd->parsed()) return run_family(family);
        if (table_cmd->parsed()) return run_table(table);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (tap_cmd->parsed()) return run_tap(tap);
        if (plumbing_cmd->parsed()) return run_plumbing(plumbing);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
