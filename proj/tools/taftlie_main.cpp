// Command-line surface: construct the canonical families, verify every
// computable axiom, classify a module against the canonical cases, compute
// small-degree H-codimensions, and test the alpha-orbit isomorphism law.
// One JSON report per invocation, byte-identical across runs for a fixed
// seed.  Exit codes: 0 ok, 1 usage/input error, 2 verification or
// classification failure, 3 budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "taftlie/taftlie.hpp"

namespace {

using namespace taftlie;

// Scalar literals: sums of terms `r`, `r*zeta^k`, `zeta^k` (also `z`),
// e.g. "1/4", "-2", "zeta", "1+zeta^2", "2/3*z^2 - 1".
CycNum parse_scalar(long m, const std::string& input) {
    CycNum acc = CycNum::zero(m);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i; };
    skip_ws();
    if (i == input.size()) throw Error("empty scalar literal");
    while (i < input.size()) {
        int sign = 1;
        skip_ws();
        if (input[i] == '+' || input[i] == '-') {
            sign = input[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        Rat coef(1);
        bool have_coef = false;
        std::size_t start = i;
        while (i < input.size() && (std::isdigit(static_cast<unsigned char>(input[i])) || input[i] == '/')) ++i;
        if (i > start) {
            coef = rat_from_string(input.substr(start, i - start));
            have_coef = true;
            skip_ws();
            if (i < input.size() && input[i] == '*') { ++i; skip_ws(); }
        }
        long zpow = 0;
        bool have_z = false;
        if (i < input.size() && (input[i] == 'z' || input[i] == 'Z')) {
            if (input.compare(i, 4, "zeta") == 0) i += 4;
            else ++i;
            have_z = true;
            zpow = 1;
            skip_ws();
            if (i < input.size() && input[i] == '^') {
                ++i;
                skip_ws();
                std::size_t es = i;
                if (i < input.size() && input[i] == '-') ++i;
                while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
                if (i == es) throw Error("malformed zeta exponent in scalar '" + input + "'");
                zpow = std::stol(input.substr(es, i - es));
            }
        }
        if (!have_coef && !have_z) throw Error("cannot parse scalar term in '" + input + "'");
        CycNum term = have_z ? CycNum::zeta_power(m, zpow) : CycNum::one(m);
        term = CycNum::from_rat(m, coef) * term;
        if (sign < 0) term = -term;
        acc += term;
        skip_ws();
    }
    return acc;
}

struct FamilyFlags {
    std::string family;   // L_alpha | L_gamma
    std::string base;     // sl2 | sl3
    std::string base_file;
    long m = 2;
    std::string scalar = "0";
    std::string input_file;  // alternative: full HModuleLie JSON
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f, bool with_scalar = true) {
    cmd->add_option("--family", f.family, "family: L_alpha or L_gamma")
        ->check(CLI::IsMember({"L_alpha", "L_gamma"}));
    cmd->add_option("--B", f.base, "base simple algebra: sl2 or sl3")
        ->check(CLI::IsMember({"sl2", "sl3"}));
    cmd->add_option("--B-file", f.base_file, "base algebra from a LieAlgebra JSON file");
    cmd->add_option("--m", f.m, "conductor (order of the root of unity)");
    if (with_scalar) cmd->add_option("--scalar", f.scalar, "alpha or gamma, e.g. '1/4' or 'zeta'");
    cmd->add_option("--in", f.input_file, "HModuleLie JSON file instead of family flags");
}

LieAlgebra load_base(const FamilyFlags& f) {
    if (!f.base_file.empty()) {
        std::ifstream in(f.base_file);
        if (!in) throw Error("cannot open " + f.base_file);
        Json j = Json::parse(in);
        return lie_from_json(j);
    }
    if (f.base == "sl2") return make_sl(2, f.m);
    if (f.base == "sl3") return make_sl(3, f.m);
    throw Error("no base algebra given (use --B or --B-file)");
}

HModuleLie load_module(const FamilyFlags& f, Json& params_out) {
    if (!f.input_file.empty()) {
        std::ifstream in(f.input_file);
        if (!in) throw Error("cannot open " + f.input_file);
        Json j = Json::parse(in);
        params_out = Json{{"in", f.input_file}};
        return hmodule_from_json(j);
    }
    if (f.family.empty()) throw Error("need --family (or --in FILE)");
    LieAlgebra B = load_base(f);
    CycNum scalar = parse_scalar(f.m, f.scalar);
    params_out = Json{{"family", f.family},
                      {"B", f.base_file.empty() ? f.base : f.base_file},
                      {"m", f.m},
                      {"scalar", to_json(scalar)}};
    if (f.family == "L_alpha") return build_L_alpha(B, f.m, scalar);
    return build_L_gamma(B, f.m, scalar);
}

void emit(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write " + out_path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Taft-module Lie algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string out_path;
    std::uint64_t seed = kDefaultSeed;
    bool timing = false;
    app.add_option("--out", out_path, "write the JSON report here instead of stdout");
    app.add_option("--seed", seed, "seed for randomized identity checks");
    app.add_flag("--timing", timing, "include elapsed_ms in the report (breaks byte-determinism)");

    FamilyFlags fc, fv, fk, fd;
    auto* c_construct = app.add_subcommand("construct", "build a family member and emit its JSON");
    add_family_flags(c_construct, fc);
    auto* c_verify = app.add_subcommand("verify", "run every structural check on a module");
    add_family_flags(c_verify, fv);
    auto* c_classify = app.add_subcommand("classify", "match a module against the canonical cases");
    add_family_flags(c_classify, fk);
    auto* c_codim = app.add_subcommand("codim", "compute c_n^H and check the upper bound");
    add_family_flags(c_codim, fd);
    int codim_n = 1;
    unsigned long long budget = kDefaultCodimBudget;
    c_codim->add_option("--n", codim_n, "degree of the multilinear identities");
    c_codim->add_option("--budget", budget, "evaluation-matrix entry budget");

    auto* c_iso = app.add_subcommand("iso", "test L_alpha1(B) ~ L_alpha2(B)");
    std::string iso_base = "sl2", iso_a1 = "1", iso_a2 = "1";
    long iso_m = 2;
    c_iso->add_option("--B", iso_base)->check(CLI::IsMember({"sl2", "sl3"}));
    c_iso->add_option("--m", iso_m);
    c_iso->add_option("--alpha1", iso_a1);
    c_iso->add_option("--alpha2", iso_a2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints the message / help text
        return rc == 0 ? 0 : 1;
    }

    auto started = std::chrono::steady_clock::now();
    Json report;
    int exit_code = 0;
    try {
        if (c_construct->parsed()) {
            Json params;
            HModuleLie M = load_module(fc, params);
            report = Json{{"command", "construct"}, {"params", params}, {"seed", seed}};
            report["module"] = to_json(M);
            report["verification"] = to_json(verify_module_algebra(M));
        } else if (c_verify->parsed()) {
            Json params;
            HModuleLie M = load_module(fv, params);
            report = Json{{"command", "verify"}, {"params", params}, {"seed", seed}};
            Report all;
            all.merge(check_lie_axioms(M.L));
            all.merge(verify_hopf_axioms(M.H));
            all.merge(verify_module_algebra(M));
            if (M.taft) all.merge(verify_graded_lemmas(M, seed));
            report["checks"] = to_json(all);
            report["all_pass"] = all.all_pass();
            if (!all.all_pass()) exit_code = 2;
        } else if (c_classify->parsed()) {
            Json params;
            HModuleLie M = load_module(fk, params);
            report = Json{{"command", "classify"}, {"params", params}, {"seed", seed}};
            ClassificationResult r = classify(M, seed);
            report["result"] = to_json(r);
            if (r.kind == ClassCase::unrecognized) exit_code = 2;
        } else if (c_codim->parsed()) {
            Json params;
            HModuleLie M = load_module(fd, params);
            report = Json{{"command", "codim"}, {"params", params}, {"seed", seed}};
            BoundReport b = check_bound(M, codim_n, budget);
            report.update(to_json(b));
            if (!b.within_bound) exit_code = 2;
        } else if (c_iso->parsed()) {
            LieAlgebra B = iso_base == "sl3" ? make_sl(3, iso_m) : make_sl(2, iso_m);
            FamilyParams p1{Family::L_alpha, B, iso_m, parse_scalar(iso_m, iso_a1)};
            FamilyParams p2{Family::L_alpha, B, iso_m, parse_scalar(iso_m, iso_a2)};
            FamilyIsoResult r = are_isomorphic_family(p1, p2);
            report = Json{{"command", "iso"},
                          {"params", Json{{"B", iso_base}, {"m", iso_m}, {"alpha1", to_json(p1.scalar)}, {"alpha2", to_json(p2.scalar)}}},
                          {"seed", seed},
                          {"isomorphic", r.isomorphic},
                          {"detail", r.detail}};
            if (r.isomorphic) {
                report["k"] = r.shift;
                report["certificate_checks"] = to_json(verify_iso(*r.certificate));
            }
        }
    } catch (const BudgetExceeded& e) {
        report = Json{{"error", "budget_exceeded"}, {"required_entries", e.required}, {"budget", e.budget}};
        exit_code = 3;
    } catch (const VerificationError& e) {
        report = Json{{"error", "verification_failed"}, {"message", e.what()}};
        exit_code = 2;
    } catch (const std::exception& e) {
        report = Json{{"error", "invalid_input"}, {"message", e.what()}};
        exit_code = 1;
    }

    if (timing) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        report["elapsed_ms"] = elapsed.count();
    }
    try {
        emit(report, out_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
