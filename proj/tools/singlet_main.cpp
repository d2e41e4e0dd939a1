#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "singlet/io.hpp"
#include "singlet/ops.hpp"
#include "singlet/validate.hpp"

namespace {

using singlet::io::json;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
}

int run_basis(const std::string& group, int wmax, const std::string& format,
              const std::string& out_path) {
    std::string text;
    if (format == "csv")
        text = group == "su2" ? singlet::io::basis_csv_su2(wmax) : singlet::io::basis_csv_su3(wmax);
    else
        text = singlet::io::dump(group == "su2" ? singlet::io::basis_listing_su2(wmax)
                                                : singlet::io::basis_listing_su3(wmax));
    write_output(text, out_path);
    return 0;
}

int run_act(const std::string& group, const std::string& op_text, const std::string& label_text,
            bool via_oracle, bool with_float, const std::string& out_path) {
    const json label_json = json::parse(label_text);
    json result;
    if (group == "su2") {
        result = singlet::io::act_result_su2(op_text, singlet::io::su2_label_from_json(label_json),
                                             via_oracle, with_float);
    } else {
        result = singlet::io::act_result_su3(op_text, singlet::io::su3_label_from_json(label_json),
                                             via_oracle, with_float);
    }
    write_output(singlet::io::dump(result), out_path);
    return 0;
}

int run_matrix(const std::string& group, const std::string& op_text, int wmax, bool via_oracle,
               bool with_float, const std::string& out_path) {
    const json result = group == "su2"
                            ? singlet::io::matrix_export_su2(op_text, wmax, via_oracle, with_float)
                            : singlet::io::matrix_export_su3(op_text, wmax, via_oracle, with_float);
    write_output(singlet::io::dump(result), out_path);
    return 0;
}

int run_verify(const std::string& group, int wmax, const std::string& out_path) {
    const singlet::validate::Report report = group == "su2" ? singlet::validate::verify_su2(wmax)
                                                            : singlet::validate::verify_su3(wmax);
    for (const auto& c : report.checks) {
        const char* mark = c.passed ? "[PASS]" : (c.claim ? "[FAIL:published-claim]" : "[FAIL]");
        std::cout << mark << " " << c.name << " — " << c.detail << "\n";
    }
    std::cout << report.ledger.size() << " discrepancy record(s) against published formulas\n";
    if (!out_path.empty())
        write_output(singlet::io::dump(singlet::io::ledger_json(report.ledger, group)), out_path);
    if (!report.ok()) {
        std::cout << "engine does not match the oracle\n";
        return 1;
    }
    std::cout << "engine matches the oracle at this cutoff\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "singlet: exact singlet bases of three coupled SU(2)/SU(3) irreps and the\n"
        "closed-form action of invariant operators, with a brute-force Fock-space\n"
        "verifier.  Operators use the grammar  a+(1).b+(2)  /  eps(a+(3),b(2),a+(2))\n"
        "/ N(2); for SU(2), species b denotes the epsilon-conjugated doublet."};
    app.require_subcommand(1);

    std::string group = "su3";
    std::string op_text;
    std::string label_text;
    std::string format = "json";
    std::string out_path;
    int wmax = 4;
    bool via_oracle = false;
    bool with_float = false;

    const auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", group, "su2 | su3")
            ->check(CLI::IsMember({"su2", "su3"}))
            ->required();
    };

    CLI::App* basis = app.add_subcommand("basis", "enumerate basis labels with exact norms");
    add_group(basis);
    basis->add_option("--wmax", wmax, "weight cutoff (total quanta of a+ b+ pairs)")->required();
    basis->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    basis->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* act = app.add_subcommand("act", "apply one invariant operator to one basis state");
    add_group(act);
    act->add_option("--op", op_text, "operator expression")->required();
    act->add_option("--label", label_text, "basis label as JSON object")->required();
    act->add_flag("--via-oracle", via_oracle,
                  "evaluate in the Fock space (works for operators outside the closed-form "
                  "catalog)");
    act->add_flag("--float", with_float, "add a lossy decimal column");
    act->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* matrix =
        app.add_subcommand("matrix", "export the sparse operator matrix over a truncated basis");
    add_group(matrix);
    matrix->add_option("--op", op_text, "operator expression")->required();
    matrix->add_option("--wmax", wmax, "weight cutoff; targets above it are dropped")->required();
    matrix->add_flag("--via-oracle", via_oracle, "evaluate in the Fock space");
    matrix->add_flag("--float", with_float, "add a lossy decimal column");
    matrix->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "replay every closed-form coefficient against the Fock construction");
    add_group(verify);
    verify->add_option("--wmax", wmax, "cutoff: weight for su3, total oscillator number for su2")
        ->required();
    verify->add_option("--out", out_path, "write the discrepancy ledger JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (basis->parsed()) return run_basis(group, wmax, format, out_path);
        if (act->parsed()) return run_act(group, op_text, label_text, via_oracle, with_float, out_path);
        if (matrix->parsed()) return run_matrix(group, op_text, wmax, via_oracle, with_float, out_path);
        if (verify->parsed()) return run_verify(group, wmax, out_path);
    } catch (const singlet::CatalogMiss& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: re-run with --via-oracle to evaluate it numerically\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
