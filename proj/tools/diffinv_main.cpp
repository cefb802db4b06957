// Command-line surface: compute, verify and compare the differential
// invariants the library constructs.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "diffinv/checks.hpp"
#include "diffinv/expr.hpp"
#include "diffinv/report.hpp"

using namespace diffinv;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<Rational> parse_vector(const std::string& text) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(rat_from_string(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(rat_from_string(cur));
    return out;
}

AffineMap parse_affine(const std::string& htext, const std::string& h0text) {
    std::vector<std::vector<Rational>> rows;
    std::string cur;
    for (char c : htext) {
        if (c == ';') {
            rows.push_back(parse_vector(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) rows.push_back(parse_vector(cur));
    std::vector<Rational> h0;
    if (!h0text.empty()) h0 = parse_vector(h0text);
    return AffineMap(std::move(rows), std::move(h0));
}

GroupSpec resolve_group(const std::string& name, const std::string& file, unsigned n) {
    if (!file.empty()) return parse_group_file(file);
    return builtin_group(name, n);
}

int emit_report(const VerifyReport& report, const std::string& command, unsigned n,
                bool json) {
    if (json) {
        std::cout << report_json(report, command, n) << "\n";
    } else {
        std::cout << report.describe() << "\n";
    }
    return report.passed() ? kExitPass : kExitFail;
}

std::string rationals_json(const std::vector<Rational>& values) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : values) j.push_back(rat_str(v));
    return j.dump();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact differential invariants of curves under affine subgroups"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string expr_text, h_text, h0_text, p_text;
    std::string group_name = "gl-affine", group_file, variant_name_opt = "log";
    std::string identity, identity_arg, mode_name_opt;
    std::string curve1, curve2, t0_text = "1", t01_text = "1", t02_text = "1";
    unsigned n = 2;
    bool g_flag = false;
    unsigned trials = 0;
    std::uint64_t seed = 12345;
    bool serial = false;

    auto* cmd_derive = app.add_subcommand("derive", "apply d to an expression");
    cmd_derive->add_option("expr", expr_text, "expression")->required();
    cmd_derive->add_option("--n", n, "dimension (bounds x-indices)");

    auto* cmd_act = app.add_subcommand("act", "substitute x -> h x + h0");
    cmd_act->add_option("expr", expr_text, "expression")->required();
    cmd_act->add_option("--h", h_text, "matrix rows 'a,b;c,d'")->required();
    cmd_act->add_option("--h0", h0_text, "translation 'a,b'");

    auto* cmd_reparam = app.add_subcommand("reparam", "reinterpret d as g^-1 d or p^-1 d");
    cmd_reparam->add_option("expr", expr_text, "expression")->required();
    cmd_reparam->add_option("--p", p_text, "normalizer expression");
    cmd_reparam->add_flag("--g", g_flag, "use the symbolic g reparametrization");
    cmd_reparam->add_option("--n", n, "dimension");

    auto* cmd_invariant = app.add_subcommand("invariant", "print a constructed invariant");
    cmd_invariant->add_option("name", identity, "p1|p2|p|gl-gens|group-gens")->required();
    cmd_invariant->add_option("--n", n, "dimension");
    cmd_invariant->add_option("--group", group_name, "group for group-gens");
    cmd_invariant->add_option("--group-file", group_file, "group catalog file");
    cmd_invariant->add_option("--variant", variant_name_opt, "p variant: log|ratio");

    auto* cmd_verify = app.add_subcommand("verify", "verify an identity");
    cmd_verify->add_option("identity", identity,
                           "eq2|eq3|eq4|delta-log|minor-law J|weight NAME|normalization "
                           "NAME|phi K|theorem2|example3|example4|all")
        ->required();
    cmd_verify->add_option("arg", identity_arg, "identity argument (J, K or NAME)");
    cmd_verify->add_option("--n", n, "dimension");
    cmd_verify->add_option("--mode", mode_name_opt, "symbolic|eval");
    cmd_verify->add_option("--trials", trials, "evaluation trials");
    cmd_verify->add_option("--seed", seed, "campaign seed");
    cmd_verify->add_flag("--serial", serial, "disable parallel trial evaluation");

    auto* cmd_signature = app.add_subcommand("signature", "invariant signature of a curve");
    cmd_signature->add_option("curve", curve1, "curve file")->required();
    cmd_signature->add_option("--t0", t0_text, "evaluation point");
    cmd_signature->add_option("--group", group_name, "group name");
    cmd_signature->add_option("--group-file", group_file, "group catalog file");
    cmd_signature->add_option("--n", n, "dimension");
    cmd_signature->add_option("--variant", variant_name_opt, "p variant: log|ratio");

    auto* cmd_equiv = app.add_subcommand("equiv", "compare two curves by signature");
    cmd_equiv->add_option("curve1", curve1, "first curve file")->required();
    cmd_equiv->add_option("curve2", curve2, "second curve file")->required();
    cmd_equiv->add_option("--t01", t01_text, "evaluation point on curve1");
    cmd_equiv->add_option("--t02", t02_text, "evaluation point on curve2");
    cmd_equiv->add_option("--group", group_name, "group name");
    cmd_equiv->add_option("--group-file", group_file, "group catalog file");
    cmd_equiv->add_option("--n", n, "dimension");
    cmd_equiv->add_option("--variant", variant_name_opt, "p variant: log|ratio");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        ParseOptions popts;
        popts.max_x = n;

        if (cmd_derive->parsed()) {
            DiffRational f = lower(parse(expr_text, popts), n);
            std::cout << f.derive().str() << "\n";
            return kExitPass;
        }

        if (cmd_act->parsed()) {
            AffineMap m = parse_affine(h_text, h0_text);
            popts.max_x = m.dim();
            DiffRational f = lower(parse(expr_text, popts), m.dim());
            std::cout << act_affine(f, m).str() << "\n";
            return kExitPass;
        }

        if (cmd_reparam->parsed()) {
            DiffRational f = lower(parse(expr_text, popts), n);
            DerivationSpec spec = DerivationSpec::base();
            if (g_flag && !p_text.empty())
                throw std::invalid_argument("choose either --g or --p, not both");
            if (g_flag) spec = DerivationSpec::g_reparam();
            if (!p_text.empty())
                spec = DerivationSpec::p_reparam(lower(parse(p_text, popts), n));
            std::cout << reinterpret(f, spec).str() << "\n";
            return kExitPass;
        }

        if (cmd_invariant->parsed()) {
            PVariant variant = variant_name_opt == "ratio" ? PVariant::Ratio
                                                           : PVariant::LogDerivative;
            auto print_invariant = [&](const WeightedInvariant& inv) {
                if (json) {
                    nlohmann::json j;
                    j["command"] = "invariant";
                    j["name"] = inv.name;
                    j["n"] = n;
                    j["weight"] = inv.weight;
                    j["formula"] = inv.formula;
                    j["expression"] = inv.expr.str();
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << inv.name << " (weight " << inv.weight << ", n=" << n << ")\n";
                    std::cout << "formula:  " << inv.formula << "\n";
                    std::cout << "expanded: " << inv.expr.str() << "\n";
                }
            };
            auto print_generators = [&](const std::vector<DiffRational>& gens) {
                if (json) {
                    nlohmann::json j = nlohmann::json::array();
                    for (const auto& g : gens) j.push_back(g.str());
                    std::cout << j.dump() << "\n";
                } else {
                    for (const auto& g : gens) std::cout << g.str() << "\n";
                }
            };
            if (identity == "p1") {
                print_invariant(p1(n));
            } else if (identity == "p2") {
                print_invariant(p2(n));
            } else if (identity == "p") {
                print_invariant(p_weight1(n, variant));
            } else if (identity == "gl-gens") {
                print_generators(gl_generators(n));
            } else if (identity == "group-gens") {
                print_generators(h_generators(resolve_group(group_name, group_file, n)));
            } else {
                throw std::invalid_argument("unknown invariant '" + identity + "'");
            }
            return kExitPass;
        }

        if (cmd_verify->parsed()) {
            RunMode mode = RunMode::Evaluation;
            bool mode_explicit = false;
            if (!mode_name_opt.empty()) {
                mode_explicit = true;
                if (mode_name_opt == "symbolic") {
                    mode = RunMode::Symbolic;
                } else if (mode_name_opt == "eval" || mode_name_opt == "evaluation") {
                    mode = RunMode::Evaluation;
                } else {
                    throw std::invalid_argument("--mode expects symbolic or eval");
                }
            }
            auto fill = [&](CheckRequest& req) {
                if (trials > 0) req.opts.trials = trials;
                req.opts.seed = seed;
                req.opts.parallel = !serial;
            };
            if (identity == "all") {
                auto requests = all_checks(n);
                bool all_pass = true;
                const auto start = std::chrono::steady_clock::now();
                nlohmann::json array = nlohmann::json::array();
                for (auto& req : requests) {
                    fill(req);
                    if (trials == 0) req.opts.trials = std::max(req.opts.trials, 1u);
                    VerifyReport report = run_check(req);
                    all_pass = all_pass && report.passed();
                    if (json) {
                        array.push_back(
                            nlohmann::json::parse(report_json(report, "verify", n)));
                    } else {
                        std::cout << report.describe() << "\n";
                    }
                }
                const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - start)
                                         .count();
                if (json) {
                    std::cout << array.dump() << "\n";
                } else {
                    std::cout << "campaign " << (all_pass ? "passed" : "FAILED") << " in "
                              << elapsed << " ms\n";
                }
                return all_pass ? kExitPass : kExitFail;
            }
            CheckRequest req;
            req.identity = identity;
            req.arg = identity_arg;
            req.n = n;
            req.mode = mode;
            req.mode_explicit = mode_explicit;
            if (req.identity == "weight" || req.identity == "normalization")
                req.opts.trials = 20;
            fill(req);
            VerifyReport report = run_check(req);
            return emit_report(report, "verify", n, json);
        }

        if (cmd_signature->parsed()) {
            CurveSpec curve = parse_curve_file(curve1);
            GroupSpec group = resolve_group(group_name, group_file, curve.dim());
            std::optional<PVariant> variant;
            if (group.gl_p_variant)
                variant = variant_name_opt == "ratio" ? PVariant::Ratio
                                                      : PVariant::LogDerivative;
            auto values =
                invariant_signature(curve, rat_from_string(t0_text), group, variant);
            if (json) {
                nlohmann::json j;
                j["command"] = "signature";
                j["group"] = group.name;
                j["n"] = group.n;
                j["t0"] = t0_text;
                j["values"] = nlohmann::json::parse(rationals_json(values));
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& v : values) std::cout << rat_str(v) << "\n";
            }
            return kExitPass;
        }

        if (cmd_equiv->parsed()) {
            CurveSpec a = parse_curve_file(curve1);
            CurveSpec b = parse_curve_file(curve2);
            GroupSpec group = resolve_group(group_name, group_file, a.dim());
            std::optional<PVariant> variant;
            if (group.gl_p_variant)
                variant = variant_name_opt == "ratio" ? PVariant::Ratio
                                                      : PVariant::LogDerivative;
            auto verdict = equivalence_check(a, rat_from_string(t01_text), b,
                                             rat_from_string(t02_text), group, variant);
            if (json) {
                nlohmann::json j;
                j["command"] = "equiv";
                j["group"] = group.name;
                j["n"] = group.n;
                j["status"] = verdict.signatures_equal ? "signatures-equal" : "differ";
                j["differing"] = verdict.differing;
                j["signature1"] = nlohmann::json::parse(rationals_json(verdict.sig1));
                j["signature2"] = nlohmann::json::parse(rationals_json(verdict.sig2));
                std::cout << j.dump() << "\n";
            } else if (verdict.signatures_equal) {
                std::cout << "signatures-equal\n";
            } else {
                std::cout << "differ at indices:";
                for (unsigned i : verdict.differing) std::cout << " " << i;
                std::cout << "\n";
            }
            return verdict.signatures_equal ? kExitPass : kExitFail;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegeneracyError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
