// critgrp: critical groups of group representations from character tables.
//
// Exit codes:
//   0  success
//   1  verify: at least one check failed; other unexpected errors
//   2  invalid arguments, out-of-range parameters, unparsable matrix
//   3  table: output file could not be written
//   4  group: the chosen character is not faithful
//   5  group: table file unreadable, malformed, or failing validation

#include "critgrp/chartab.hpp"
#include "critgrp/critical.hpp"
#include "critgrp/errors.hpp"
#include "critgrp/intlinalg.hpp"
#include "critgrp/table_format.hpp"
#include "critgrp/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace critgrp;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,
    kBadArguments = 2,
    kWriteFailure = 3,
    kNotFaithful = 4,
    kInvalidTable = 5,
};

json matrix_json(const IntegerMatrix& A) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back(encode_integer(A(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json group_json(const AbelianGroup& g) {
    json factors = json::array();
    for (const auto& d : g.invariant_factors()) factors.push_back(encode_integer(d));
    return factors;
}

// ---- table ------------------------------------------------------------------

struct TableOptions {
    std::string family;
    int n = 0;
    long m = 0;
    std::string out;
};

int run_table(const TableOptions& opt) {
    CharacterTable table;
    try {
        if (opt.family == "symmetric") {
            if (opt.n == 0) {
                std::cerr << "table: --family symmetric needs --n\n";
                return kBadArguments;
            }
            table = symmetric_group_table(opt.n);
        } else {
            if (opt.m == 0) {
                std::cerr << "table: --family cyclic needs --m\n";
                return kBadArguments;
            }
            if (opt.m > 60) throw OutOfRange("cyclic_group_table: m must be at most 60");
            table = cyclic_group_table(opt.m);
        }
    } catch (const OutOfRange& e) {
        std::cerr << "table: " << e.what() << '\n';
        return kBadArguments;
    }

    if (opt.out.empty() || opt.out == "-") {
        write_table(std::cout, table);
        return kOk;
    }
    std::ofstream file(opt.out);
    if (file) write_table(file, table);
    if (!file) {
        std::cerr << "table: cannot write " << opt.out << '\n';
        return kWriteFailure;
    }
    return kOk;
}

// ---- group ------------------------------------------------------------------

struct GroupOptions {
    std::string table_path;
    long char_index = -1;
    std::vector<long> char_sum;
    bool regular = false;
    bool reflection = false;
    bool json = false;
};

int run_group(const GroupOptions& opt) {
    CharacterTable table;
    try {
        std::ifstream in(opt.table_path);
        if (!in) {
            std::cerr << "group: cannot read " << opt.table_path << '\n';
            return kInvalidTable;
        }
        table = read_table(in);
    } catch (const ParseError& e) {
        std::cerr << "group: " << e.what() << '\n';
        return kInvalidTable;
    }
    const auto violations = validate(table);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "group: invalid table: " << v.invariant << ": " << v.detail << '\n';
        return kInvalidTable;
    }

    const int chosen = (opt.char_index >= 0) + !opt.char_sum.empty() + opt.regular + opt.reflection;
    if (chosen != 1) {
        std::cerr << "group: give exactly one of --char, --char-sum, --regular, --reflection\n";
        return kBadArguments;
    }

    ClassFunction gamma;
    std::string gamma_name;
    try {
        if (opt.char_index >= 0) {
            gamma = character(table, static_cast<std::size_t>(opt.char_index));
            gamma_name = "chi_" + std::to_string(opt.char_index);
        } else if (!opt.char_sum.empty()) {
            std::vector<std::size_t> rows;
            for (long r : opt.char_sum) {
                if (r < 0) throw OutOfRange("negative character index");
                rows.push_back(static_cast<std::size_t>(r));
                gamma_name += (gamma_name.empty() ? "" : "+") + std::string("chi_") + std::to_string(r);
            }
            gamma = character_sum(table, rows);
        } else if (opt.regular) {
            gamma = regular_character(table);
            gamma_name = "regular";
        } else {
            gamma = reflection_character(table);
            gamma_name = "reflection";
        }
    } catch (const std::exception& e) {
        std::cerr << "group: " << e.what() << '\n';
        return kBadArguments;
    }

    CriticalGroupReport report;
    try {
        report = full_report(table, gamma);
    } catch (const NotFaithful& e) {
        std::cerr << "group: NotFaithful: " << e.what() << '\n';
        return kNotFaithful;
    } catch (const NotACharacter& e) {
        std::cerr << "group: NotACharacter: " << e.what() << '\n';
        return kInvalidTable;
    }

    if (opt.json) {
        json certs = json::array();
        for (const auto& c : report.certificates)
            certs.push_back({{"d", encode_integer(c.d)}, {"multiplicity", c.multiplicity}});
        json eigen = json::array();
        for (const auto& v : mckay_eigenvalues(table, gamma)) eigen.push_back(encode_value(v));
        json doc{{"group_name", table.group_name},
                 {"gamma", gamma_name},
                 {"degree", encode_integer(gamma.degree())},
                 {"invariant_factors", group_json(report.group)},
                 {"order", encode_integer(report.group.order())},
                 {"order_formula", encode_integer(report.order_formula_value)},
                 {"real_valued", report.real_valued},
                 {"certificates", certs},
                 {"eigenvalues", eigen},
                 {"eigen_verified", report.eigen_verified},
                 {"sylow_bound_applicable", report.sylow_bound_applicable},
                 {"sylow_bound_holds", report.sylow_bound_holds}};
        std::cout << doc.dump(2) << '\n';
        return kOk;
    }

    std::cout << "group: " << table.group_name << '\n';
    std::cout << "gamma: " << gamma_name << " (degree " << gamma.degree() << ")\n";
    std::cout << "K(γ) ≅ " << report.group << '\n';
    std::cout << "order: " << report.group.order() << '\n';
    std::cout << "order formula: " << report.order_formula_value << '\n';
    if (!report.real_valued) {
        std::cout << "certificates: n/a (gamma is not real-valued)\n";
    } else if (report.certificates.empty()) {
        std::cout << "certificates: none\n";
    } else {
        std::cout << "certificates:";
        for (const auto& c : report.certificates) std::cout << " (ℤ/" << c.d << "ℤ)^" << c.multiplicity;
        std::cout << '\n';
    }
    std::cout << "eigenvectors verified: " << (report.eigen_verified ? "yes" : "no") << '\n';
    std::cout << "Sylow bound: " << (report.sylow_bound_applicable ? "applicable" : "not applicable") << ", "
              << (report.sylow_bound_holds ? "holds" : "fails") << '\n';
    return kOk;
}

// ---- snf --------------------------------------------------------------------

struct SnfOptions {
    std::string matrix_path;
    bool json = false;
};

int run_snf(const SnfOptions& opt) {
    IntegerMatrix A;
    try {
        if (opt.matrix_path == "-") {
            A = parse_matrix(std::cin);
        } else {
            std::ifstream in(opt.matrix_path);
            if (!in) {
                std::cerr << "snf: cannot read " << opt.matrix_path << '\n';
                return kBadArguments;
            }
            A = parse_matrix(in);
        }
    } catch (const ParseError& e) {
        std::cerr << "snf: " << e.what() << '\n';
        return kBadArguments;
    }
    const auto snf = smith_normal_form(A);
    if (opt.json) {
        json diag = json::array();
        for (const auto& s : snf.diagonal) diag.push_back(encode_integer(s));
        std::cout << json{{"diagonal", diag}, {"P", matrix_json(snf.P)}, {"Q", matrix_json(snf.Q)}}.dump(2) << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) std::cout << (i ? " " : "") << snf.diagonal[i];
    std::cout << '\n';
    return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyOptions {
    std::string suite = "all";
    int n_max = 7;
    long m_max = 10;
    bool json = false;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<CheckResult> results;
    try {
        results = run_verification(opt.suite, opt.n_max, opt.m_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return kBadArguments;
    }
    bool all_pass = true;
    json lines = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (opt.json) {
            lines.push_back({{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.check << "  " << r.instance << "  " << r.detail
                      << '\n';
        }
    }
    if (opt.json) std::cout << json{{"all_pass", all_pass}, {"checks", lines}}.dump(2) << '\n';
    return all_pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical groups of faithful representations of finite groups"};
    app.require_subcommand(1);

    TableOptions table_opt;
    auto* table_cmd = app.add_subcommand("table", "Write a built-in character table as a critgrp-table/1 document");
    table_cmd->add_option("--family", table_opt.family, "Table family")
        ->required()
        ->check(CLI::IsMember({"symmetric", "cyclic"}));
    table_cmd->add_option("--n", table_opt.n, "n for the symmetric group S_n (1..12)");
    table_cmd->add_option("--m", table_opt.m, "m for the cyclic group Z/m (1..60)");
    table_cmd->add_option("--out,-o", table_opt.out, "Output path (default: stdout)");
    table_cmd->add_flag("--json", "Accepted for uniformity; the document is always JSON");

    GroupOptions group_opt;
    auto* group_cmd = app.add_subcommand("group", "Compute K(gamma) and the full verification report");
    group_cmd->add_option("table", group_opt.table_path, "Table document path")->required();
    group_cmd->add_option("--char", group_opt.char_index, "Use irreducible character with this row index");
    group_cmd->add_option("--char-sum", group_opt.char_sum, "Use the sum of these rows, e.g. 1,5")->delimiter(',');
    group_cmd->add_flag("--regular", group_opt.regular, "Use the regular character");
    group_cmd->add_flag("--reflection", group_opt.reflection, "Use the reflection character (symmetric tables)");
    group_cmd->add_flag("--json", group_opt.json, "Machine-readable output");

    SnfOptions snf_opt;
    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
    snf_cmd->add_option("matrix", snf_opt.matrix_path, "Matrix path, or - for stdin")->required();
    snf_cmd->add_flag("--json", snf_opt.json, "Also print P and Q as JSON");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification sweeps over built-in tables");
    verify_cmd->add_option("--suite", verify_opt.suite, "Suite to run")
        ->check(CLI::IsMember(verify_suites()))
        ->capture_default_str();
    verify_cmd->add_option("--n-max", verify_opt.n_max, "Largest symmetric group S_n")->capture_default_str();
    verify_cmd->add_option("--m-max", verify_opt.m_max, "Largest cyclic group Z/m")->capture_default_str();
    verify_cmd->add_flag("--json", verify_opt.json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArguments;
    }

    try {
        if (*table_cmd) return run_table(table_opt);
        if (*group_cmd) return run_group(group_opt);
        if (*snf_cmd) return run_snf(snf_opt);
        if (*verify_cmd) return run_verify(verify_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kFailed;
}
