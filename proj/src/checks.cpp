#include "diffinv/checks.hpp"

#include <functional>
#include <stdexcept>

#include "diffinv/phi.hpp"
#include "diffinv/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diffinv {

namespace {

constexpr unsigned kRetryCap = 100;

// A campaign trial: true/false = decided, nullopt = degenerate draw.
using TrialFn = std::function<std::optional<bool>(std::uint64_t trial_seed)>;

enum : int { kPass = 0, kFail = 1, kDegenerate = 2 };

int run_one(const TrialFn& fn, std::uint64_t seed, unsigned trial) {
    for (unsigned attempt = 0; attempt < kRetryCap; ++attempt) {
        auto verdict = fn(mix_seed(seed, trial * 1009ULL + attempt));
        if (verdict) return *verdict ? kPass : kFail;
    }
    return kDegenerate;
}

VerifyReport run_campaign(const std::string& name, const EvalOptions& opts,
                          const TrialFn& fn) {
    VerifyReport report;
    report.identity = name;
    report.mode = RunMode::Evaluation;
    report.seed = opts.seed;
    report.trials_run = opts.trials;

    std::vector<int> outcomes(opts.trials, kPass);
#ifdef _OPENMP
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < static_cast<int>(opts.trials); ++t)
            outcomes[t] = run_one(fn, opts.seed, static_cast<unsigned>(t));
    } else
#endif
    {
        for (unsigned t = 0; t < opts.trials; ++t) outcomes[t] = run_one(fn, opts.seed, t);
    }

    report.status = VerifyStatus::Pass;
    for (unsigned t = 0; t < opts.trials; ++t) {
        if (outcomes[t] == kFail) {
            report.status = VerifyStatus::Fail;
            report.note = "trial " + std::to_string(t) + " found a counterexample point";
            break;
        }
        if (outcomes[t] == kDegenerate) {
            report.status = VerifyStatus::Degenerate;
            report.note = "trial " + std::to_string(t) + " exhausted the redraw cap";
            break;
        }
    }
    return report;
}

unsigned parse_index(const std::string& arg, const char* what) {
    if (arg.empty()) throw std::invalid_argument(std::string(what) + " requires an argument");
    return static_cast<unsigned>(std::stoul(arg));
}

WeightedInvariant invariant_by_name(const std::string& name, unsigned n) {
    if (name == "p1") return p1(n);
    if (name == "p2") return p2(n);
    if (name == "p-log") return p_weight1(n, PVariant::LogDerivative);
    if (name == "p-ratio") return p_weight1(n, PVariant::Ratio);
    throw std::invalid_argument("unknown invariant '" + name +
                                "' (expected p1, p2, p-log or p-ratio)");
}

// ---- the individual checks ---------------------------------------------------

VerifyReport check_phi(unsigned k) {
    VerifyReport report;
    report.identity = "phi k=" + std::to_string(k);
    report.mode = RunMode::Symbolic;
    bool ok = check_phi_expansion(k);
    // Closed-form corners of the coefficient formula.
    ok = ok && phi_coefficient(k, 1) == DiffPolynomial::variable(VarKey::g(k - 1));
    ok = ok && phi_coefficient(k, k) == DiffPolynomial::variable(VarKey::g(), k);
    report.status = ok ? VerifyStatus::Pass : VerifyStatus::Fail;
    return report;
}

VerifyReport check_weight(const std::string& name, unsigned n, const EvalOptions& opts) {
    const WeightedInvariant inv = invariant_by_name(name, n);
    GroupSpec sampler_only;
    sampler_only.n = n;
    sampler_only.sampler = SamplerKind::GLAffine;

    std::set<VarKey> vars = inv.expr.variables();
    for (unsigned i = 1; i <= n; ++i) vars.insert(VarKey::x(i));
    const unsigned prec = inv.expr.max_jet_order() + 3;
    const long w = inv.weight;

    auto fn = [&, prec, w](std::uint64_t tseed) -> std::optional<bool> {
        Rng rng(tseed);
        AffineMap m = sample_element(sampler_only, rng.next());
        try {
            auto base = random_series_bases(vars, rng, prec, opts.coeff_range);
            Series g = random_series(rng, prec, opts.coeff_range, true);
            DiffValuePoint<Series> rhs_point(base, Series::constant(Rational(1), prec));
            DiffValuePoint<Series> lhs_point(transform_series_bases(base, m), g.inverse());
            Rational lhs = lhs_point.value(inv.expr).value();
            Rational rhs = rat_pow(g.at(0), -w) * rhs_point.value(inv.expr).value();
            return lhs == rhs;
        } catch (const EvalError&) {
            return std::nullopt;
        }
    };
    VerifyReport report =
        run_campaign("weight " + name + " (w=" + std::to_string(inv.weight) + ") n=" +
                         std::to_string(n),
                     opts, fn);
    return report;
}

VerifyReport check_normalization(const std::string& name, unsigned n, RunMode mode,
                                 const EvalOptions& opts) {
    PVariant variant;
    if (name == "p-log") {
        variant = PVariant::LogDerivative;
    } else if (name == "p-ratio") {
        variant = PVariant::Ratio;
    } else {
        throw std::invalid_argument("normalization expects p-log or p-ratio");
    }

    const std::string label = "normalization " + name + " n=" + std::to_string(n);
    if (mode == RunMode::Symbolic) {
        // Full expansion; heavy for the larger normalizers, so only on
        // explicit request.
        DiffRational p = p_weight1(n, variant).expr;
        DiffRational r = reinterpret(p, DerivationSpec::p_reparam(p));
        VerifyReport report;
        report.identity = label;
        report.mode = RunMode::Symbolic;
        report.status = (r == DiffRational(1)) ? VerifyStatus::Pass : VerifyStatus::Fail;
        return report;
    }

    const unsigned prec = 3 * n + 10;
    auto fn = [n, variant, prec, &opts](std::uint64_t tseed) -> std::optional<bool> {
        Rng rng(tseed);
        std::set<VarKey> vars;
        for (unsigned i = 1; i <= n; ++i) vars.insert(VarKey::x(i));
        try {
            auto base = random_series_bases(vars, rng, prec, opts.coeff_range);
            DiffValuePoint<Series> pt(base, Series::constant(Rational(1), prec));
            Series p_val = value_p(n, variant, pt);
            auto reparam = pt.reparam(p_val);
            Series v = value_p(n, variant, reparam);
            return v.value() == 1;
        } catch (const EvalError&) {
            return std::nullopt;
        }
    };
    return run_campaign(label, opts, fn);
}

VerifyReport check_minor_law(unsigned n, unsigned j, RunMode mode, const EvalOptions& opts) {
    IdentityPair pair = minor_law_pair(n, j);
    return verify_identity(pair.name, pair.lhs, pair.rhs, mode, opts);
}

VerifyReport check_theorem2(unsigned n) {
    VerifyReport report;
    report.identity = "theorem2 n=" + std::to_string(n);
    report.mode = RunMode::Symbolic;
    bool ok = true;
    std::vector<DerivationSpec> specs = {DerivationSpec::base()};
    if (n <= 2) specs.push_back(DerivationSpec::g_reparam());
    for (const auto& spec : specs) {
        for (unsigned j = 1; j <= n && ok; ++j)
            ok = theorem2_residual(n, DiffRational::variable(VarKey::x(j)), spec).is_zero();
        ok = ok && theorem2_residual(n, DiffRational(1), spec).is_zero();
        if (!ok) break;
    }
    report.status = ok ? VerifyStatus::Pass : VerifyStatus::Fail;
    return report;
}

VerifyReport check_example3() {
    VerifyReport report;
    report.identity = "example3";
    report.mode = RunMode::Symbolic;
    DiffRational p = example3_p();
    DiffPolynomial phi1;
    for (unsigned i = 1; i <= 2; ++i)
        phi1 = phi1 + DiffPolynomial::variable(VarKey::x(i), 2);
    bool ok = p == DiffRational(phi1).derive() * rat(1, 2);
    ok = ok && reinterpret(p, DerivationSpec::p_reparam(p)) == DiffRational(1);
    report.status = ok ? VerifyStatus::Pass : VerifyStatus::Fail;
    return report;
}

VerifyReport check_example4(const EvalOptions& opts) {
    // Part one, symbolic: det[dx,d^2x]^2 = phi1 phi2 - (d phi1)^2 / 4.
    DiffPolynomial det2 = DiffPolynomial::variable(VarKey::x(1, 1)) *
                              DiffPolynomial::variable(VarKey::x(2, 2)) -
                          DiffPolynomial::variable(VarKey::x(2, 1)) *
                              DiffPolynomial::variable(VarKey::x(1, 2));
    DiffPolynomial phi1, phi2;
    for (unsigned i = 1; i <= 2; ++i) {
        phi1 = phi1 + DiffPolynomial::variable(VarKey::x(i, 1), 2);
        phi2 = phi2 + DiffPolynomial::variable(VarKey::x(i, 2), 2);
    }
    bool det_identity =
        det2 * det2 == phi1 * phi2 - (phi1.derive() * phi1.derive()) * rat(1, 4);

    // Part two, evaluation: pbar^delta<phi1^delta, phi2^delta> = 1.
    GroupSpec group = builtin_group("o2-affine", 2);
    auto phis = phi_on_jets(group);
    const unsigned prec = 18;
    auto fn = [&](std::uint64_t tseed) -> std::optional<bool> {
        Rng rng(tseed);
        std::set<VarKey> vars = {VarKey::x(1), VarKey::x(2)};
        try {
            auto base = random_series_bases(vars, rng, prec, opts.coeff_range);
            DiffValuePoint<Series> pt(base, Series::constant(Rational(1), prec));
            Series p_val = pt.value(group.p);
            auto reparam = pt.reparam(p_val);
            std::map<VarKey, Series> tbase;
            for (unsigned j = 0; j < phis.size(); ++j)
                tbase.emplace(VarKey::t(j + 1), reparam.value(phis[j]));
            DiffValuePoint<Series> tpt(std::move(tbase), reparam.mult());
            return tpt.value(*group.pbar).value() == 1;
        } catch (const EvalError&) {
            return std::nullopt;
        }
    };
    VerifyReport report = run_campaign("example4", opts, fn);
    if (!det_identity) {
        report.status = VerifyStatus::Fail;
        report.note = "the Gram determinant identity failed symbolically";
    }
    return report;
}

VerifyReport run_pair(const IdentityPair& pair, RunMode mode, const EvalOptions& opts) {
    return verify_identity(pair.name, pair.lhs, pair.rhs, mode, opts);
}

} // namespace

VerifyReport run_check(const CheckRequest& req) {
    const std::string& id = req.identity;
    const unsigned n = req.n;
    if (n < 2) throw std::invalid_argument("verification requires n >= 2");

    if (id == "phi") return check_phi(parse_index(req.arg, "phi"));
    if (id == "eq2") return run_pair(eq2_pair(n), req.mode, req.opts);
    if (id == "eq3") return run_pair(eq3_pair(n), req.mode, req.opts);
    if (id == "eq4") return run_pair(eq4_pair(n), req.mode, req.opts);
    if (id == "delta-log") return run_pair(delta_log_pair(n), req.mode, req.opts);
    if (id == "minor-law")
        return check_minor_law(n, parse_index(req.arg, "minor-law"), req.mode, req.opts);
    if (id == "weight") {
        if (req.mode_explicit && req.mode == RunMode::Symbolic)
            throw std::invalid_argument("weight laws quantify over the whole group; "
                                        "they are verified in evaluation mode");
        return check_weight(req.arg, n, req.opts);
    }
    if (id == "normalization")
        return check_normalization(req.arg, n,
                                   req.mode_explicit ? req.mode : RunMode::Evaluation,
                                   req.opts);
    if (id == "theorem2") return check_theorem2(n);
    if (id == "example3") {
        if (n != 2) throw std::invalid_argument("example3 lives at n = 2");
        return check_example3();
    }
    if (id == "example4") {
        if (n != 2) throw std::invalid_argument("example4 lives at n = 2");
        return check_example4(req.opts);
    }
    throw std::invalid_argument("unknown identity '" + id + "'");
}

std::vector<std::string> known_identities() {
    return {"phi",       "eq2",          "eq3",      "eq4",      "delta-log", "minor-law",
            "weight",    "normalization", "theorem2", "example3", "example4"};
}

std::vector<CheckRequest> all_checks(unsigned n) {
    std::vector<CheckRequest> out;
    auto add = [&out, n](const std::string& id, const std::string& arg, RunMode mode,
                         unsigned trials) {
        CheckRequest req;
        req.identity = id;
        req.arg = arg;
        req.n = n;
        req.mode = mode;
        req.mode_explicit = true;
        req.opts.trials = trials;
        out.push_back(req);
    };
    for (unsigned k = 1; k <= 5; ++k) add("phi", std::to_string(k), RunMode::Symbolic, 0);
    if (n == 2) add("minor-law", std::to_string(n + 1), RunMode::Symbolic, 0);
    for (unsigned j = 1; j <= n + 1; ++j)
        add("minor-law", std::to_string(j), RunMode::Evaluation, 5);
    add("eq2", "", RunMode::Evaluation, 5);
    add("eq3", "", RunMode::Evaluation, 5);
    add("eq4", "", RunMode::Evaluation, 5);
    add("delta-log", "", RunMode::Evaluation, 5);
    add("weight", "p1", RunMode::Evaluation, 20);
    add("weight", "p-log", RunMode::Evaluation, 20);
    if (n >= 3) {
        add("weight", "p2", RunMode::Evaluation, 20);
        add("weight", "p-ratio", RunMode::Evaluation, 20);
    }
    add("normalization", "p-log", RunMode::Evaluation, 5);
    if (n >= 3) add("normalization", "p-ratio", RunMode::Evaluation, 5);
    add("theorem2", "", RunMode::Symbolic, 0);
    if (n == 2) {
        add("example3", "", RunMode::Symbolic, 0);
        add("example4", "", RunMode::Evaluation, 10);
    }
    return out;
}

} // namespace diffinv
