// liep: exact classification of [p]-nilpotent restricted Lie algebras of
// dimension <= 4 over small finite fields, with a brute-force orbit oracle.
//
// Exit codes: 0 success, 1 parse error, 2 semantic rejection / verification
// mismatch, 3 budget exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "liep/json_io.hpp"

namespace {

using namespace liep;

struct FieldArgs {
    int p = 0;
    int k = 1;
    std::vector<int> modulus;

    Field build() const {
        if (!modulus.empty()) return Field(p, k, modulus);
        if (k == 1) return Field::prime(p);
        return Field::make(p, k);
    }
};

void add_field_flags(CLI::App* cmd, FieldArgs& fa) {
    cmd->add_option("--p", fa.p, "characteristic (prime)")->required();
    cmd->add_option("--k", fa.k, "extension degree (default 1)");
    cmd->add_option("--modulus", fa.modulus,
                    "monic modulus coefficients, constant term first (e.g. 1,1,1)")
        ->delimiter(',');
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw ParseError("cannot open output file '" + out_path + "'");
    os << text << "\n";
    if (!os) throw ParseError("failed writing to '" + out_path + "'");
}

int cmd_classify(const std::string& input) {
    std::ifstream is(input);
    if (!is) throw ParseError("cannot open input file '" + input + "'");
    json j = json::parse(is);
    RestrictedAlg R = restricted_from_json(j);
    IsoLabel label = classify(R);
    std::cout << label_to_json(R.alg.field(), label).dump() << "\n";
    return 0;
}

int cmd_verify(const FieldArgs& fa, const std::vector<std::string>& algebras,
               const VerifyOptions& opts, const std::string& out_path) {
    Field F = fa.build();
    std::vector<std::string> selected = algebras;
    const bool explicit_selection = !selected.empty();
    if (!explicit_selection)
        for (int dim = 1; dim <= max_dim; ++dim)
            for (const LieAlg& L : catalog(F, dim)) selected.push_back(L.name());

    ojson out;
    out["field"] = field_to_json(F);
    ojson reports = ojson::array();
    bool any_mismatch = false;
    for (const std::string& name : selected) {
        if (!is_catalog_name(name)) throw DomainError("unknown catalog algebra '" + name + "'");
        LieAlg L = catalog_algebra(F, name);
        try {
            OrbitReport r = cross_check(L, opts);
            if (!r.mismatches.empty()) any_mismatch = true;
            reports.push_back(report_to_json(F, r));
        } catch (const BudgetError& e) {
            if (explicit_selection) throw; // the user asked for this case
            ojson skipped;
            skipped["algebra"] = name;
            skipped["field"] = field_to_json(F);
            skipped["skipped"] = e.what();
            reports.push_back(skipped);
        }
    }
    out["reports"] = reports;
    write_output(out_path, out.dump(2));
    return any_mismatch ? 2 : 0;
}

int cmd_emit_db(const FieldArgs& fa, const std::string& out_path) {
    Field F = fa.build();
    write_output(out_path, class_database(F).dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with [p]-nilpotent restricted Lie algebras of dimension <= 4"};
    app.require_subcommand(1);

    std::string classify_input;
    auto* classify_cmd =
        app.add_subcommand("classify", "print the canonical class label of a restricted Lie algebra");
    classify_cmd->add_option("input", classify_input, "path to a restricted-algebra JSON file")
        ->required();

    FieldArgs verify_field;
    std::vector<std::string> verify_algebras;
    VerifyOptions verify_opts;
    std::string verify_out;
    auto* verify_cmd = app.add_subcommand(
        "verify", "enumerate all [p]-nilpotent [p]-maps, partition into orbits and cross-check "
                  "against the classification");
    add_field_flags(verify_cmd, verify_field);
    verify_cmd->add_option("--algebra", verify_algebras, "catalog algebra name (repeatable)");
    verify_cmd->add_option("--budget-pmaps", verify_opts.budget_pmaps,
                           "max candidate [p]-maps per algebra")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--budget-conj", verify_opts.budget_conj,
                           "max conjugation steps in orbit closure")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--workers", verify_opts.workers, "worker threads (0 = hardware)");
    verify_cmd->add_option("--out", verify_out, "write the report here instead of stdout");

    FieldArgs db_field;
    std::string db_out;
    auto* db_cmd = app.add_subcommand("emit-db", "write the class database for one field");
    add_field_flags(db_cmd, db_field);
    db_cmd->add_option("--out", db_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (*classify_cmd) return cmd_classify(classify_input);
        if (*verify_cmd) return cmd_verify(verify_field, verify_algebras, verify_opts, verify_out);
        if (*db_cmd) return cmd_emit_db(db_field, db_out);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const liep::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const liep::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const liep::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
