#include "diffinv/eval.hpp"

#include <algorithm>
#include <sstream>

#include "diffinv/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diffinv {

Assignment jets_of_curve(const CurveSpec& curve, const Rational& t0, unsigned max_order) {
    Assignment out;
    for (unsigned i = 0; i < curve.dim(); ++i) {
        auto jets = jets_at(curve.coords[i], t0, max_order);
        for (unsigned k = 0; k <= max_order; ++k) out[VarKey::x(i + 1, k)] = jets[k];
    }
    return out;
}

DiffValuePoint<Series> curve_series_point(const CurveSpec& curve, const Rational& t0,
                                          unsigned prec) {
    std::map<VarKey, Series> base;
    for (unsigned i = 0; i < curve.dim(); ++i) {
        auto jets = jets_at(curve.coords[i], t0, prec == 0 ? 0 : prec - 1);
        base.emplace(VarKey::x(i + 1), Series::from_jets(jets));
    }
    return DiffValuePoint<Series>(std::move(base), Series::constant(Rational(1), prec));
}

DiffValuePoint<UniRational> curve_function_point(const CurveSpec& curve) {
    std::map<VarKey, UniRational> base;
    for (unsigned i = 0; i < curve.dim(); ++i) base.emplace(VarKey::x(i + 1), curve.coords[i]);
    return DiffValuePoint<UniRational>(std::move(base), UniRational(Rational(1)));
}

std::string VerifyReport::describe() const {
    std::ostringstream out;
    out << identity << ": ";
    switch (status) {
    case VerifyStatus::Pass:
        if (mode == RunMode::Symbolic) {
            out << "identity holds symbolically";
        } else {
            out << "identity holds with evaluation-level evidence (" << trials_run
                << " trials)";
        }
        break;
    case VerifyStatus::Fail: out << "FAILED"; break;
    case VerifyStatus::Degenerate: out << "DEGENERATE (retry cap exhausted)"; break;
    }
    if (mode == RunMode::Evaluation) out << " [seed " << seed << "]";
    if (!note.empty()) out << " -- " << note;
    if (witness) {
        out << "; witness:";
        for (const auto& [v, q] : *witness) out << " " << v.display() << "=" << rat_str(q);
    }
    return out.str();
}

namespace {

constexpr unsigned kRetryCap = 100;

// Trial outcome codes for the parallel loop.
enum : int { kTrialPass = 0, kTrialFail = 1, kTrialDegenerate = 2 };

Assignment draw_assignment(const std::set<VarKey>& vars, Rng& rng, long range) {
    Assignment a;
    for (const VarKey& v : vars) a[v] = rng.rational(range);
    return a;
}

// Deterministic per (seed, trial): returns the outcome and, when asked, the
// assignment that decided the trial.
int run_trial(const DiffRational& lhs, const DiffRational& rhs,
              const std::set<VarKey>& vars, std::uint64_t seed, unsigned trial,
              long range, Assignment* witness_out) {
    for (unsigned attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng rng(mix_seed(seed, trial * 1009ULL + attempt));
        Assignment a = draw_assignment(vars, rng, range);
        try {
            Rational l = lhs.evaluate(a);
            Rational r = rhs.evaluate(a);
            if (l == r) return kTrialPass;
            if (witness_out) *witness_out = a;
            return kTrialFail;
        } catch (const EvalError&) {
            // vanishing denominator; redraw
        }
    }
    return kTrialDegenerate;
}

} // namespace

VerifyReport verify_identity(const std::string& name, const DiffRational& lhs,
                             const DiffRational& rhs, RunMode mode,
                             const EvalOptions& opts) {
    VerifyReport report;
    report.identity = name;
    report.mode = mode;
    report.seed = opts.seed;

    if (mode == RunMode::Symbolic) {
        report.status = (lhs == rhs) ? VerifyStatus::Pass : VerifyStatus::Fail;
        return report;
    }

    std::set<VarKey> vars = lhs.variables();
    auto rv = rhs.variables();
    vars.insert(rv.begin(), rv.end());

    const unsigned trials = opts.trials;
    std::vector<int> outcomes(trials, kTrialPass);

#ifdef _OPENMP
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < static_cast<int>(trials); ++t)
            outcomes[t] = run_trial(lhs, rhs, vars, opts.seed, static_cast<unsigned>(t),
                                    opts.coeff_range, nullptr);
    } else
#endif
    {
        for (unsigned t = 0; t < trials; ++t)
            outcomes[t] = run_trial(lhs, rhs, vars, opts.seed, t, opts.coeff_range, nullptr);
    }

    report.trials_run = trials;
    report.status = VerifyStatus::Pass;
    for (unsigned t = 0; t < trials; ++t) {
        if (outcomes[t] == kTrialFail) {
            report.status = VerifyStatus::Fail;
            Assignment witness;
            run_trial(lhs, rhs, vars, opts.seed, t, opts.coeff_range, &witness);
            report.witness = std::move(witness);
            break;
        }
        if (outcomes[t] == kTrialDegenerate) {
            report.status = VerifyStatus::Degenerate;
            report.note = "trial " + std::to_string(t) + " exhausted the redraw cap";
            break;
        }
    }
    return report;
}

namespace {

// Signature engine: the delta-reinterpreted generator values at the point.
std::vector<Rational> signature_at_point(DiffValuePoint<Series>& pt, const GroupSpec& group,
                                         std::optional<PVariant> variant) {
    GroupSpec g = group;
    if (variant) g.gl_p_variant = variant;
    const unsigned n = g.n;

    // Common-position guards, reported explicitly rather than as raw
    // division failures.
    Series w_val = value_w(n, pt);
    if (w_val.value() == 0) throw DegeneracyError("W vanishes at the evaluation point");
    if (g.gl_p_variant) {
        Series p1_val = value_p1(n, pt);
        if (p1_val.value() == 0) throw DegeneracyError("p1 vanishes at the evaluation point");
    }
    Series p_val = group_p_value(g, pt);
    if (p_val.value() == 0) throw DegeneracyError("p vanishes at the evaluation point");

    auto reparam = pt.reparam(p_val);
    std::vector<Rational> out;
    for (unsigned i = 1; i <= n; ++i)
        out.push_back(value_w_ratio(n, i, reparam).value());
    for (const DiffRational& phi : phi_on_jets(g))
        out.push_back(reparam.value(phi).value());
    return out;
}

unsigned signature_precision(const GroupSpec& group) {
    // p costs about n+3 orders, the delta-jets n+1 more, the generators n+1.
    return 4 * group.n + 12;
}

} // namespace

std::vector<Rational> invariant_signature(const CurveSpec& curve, const Rational& t0,
                                          const GroupSpec& group,
                                          std::optional<PVariant> variant) {
    if (curve.dim() != group.n)
        throw std::invalid_argument("curve dimension does not match the group");
    auto pt = curve_series_point(curve, t0, signature_precision(group));
    return signature_at_point(pt, group, variant);
}

EquivalenceVerdict equivalence_check(const CurveSpec& c1, const Rational& t01,
                                     const CurveSpec& c2, const Rational& t02,
                                     const GroupSpec& group,
                                     std::optional<PVariant> variant) {
    EquivalenceVerdict verdict;
    verdict.sig1 = invariant_signature(c1, t01, group, variant);
    verdict.sig2 = invariant_signature(c2, t02, group, variant);
    verdict.signatures_equal = true;
    for (unsigned i = 0; i < verdict.sig1.size(); ++i) {
        if (verdict.sig1[i] != verdict.sig2[i]) {
            verdict.signatures_equal = false;
            verdict.differing.push_back(i);
        }
    }
    return verdict;
}

std::vector<Rational> realization_residuals(const CurveSpec& curve, const Rational& t0,
                                            const std::vector<UniRational>& a,
                                            const std::vector<UniRational>& b,
                                            const GroupSpec& group,
                                            std::optional<PVariant> variant) {
    GroupSpec g = group;
    if (variant) g.gl_p_variant = variant;
    const unsigned n = g.n;
    if (curve.dim() != n) throw std::invalid_argument("curve dimension does not match the group");
    if (a.size() != n) throw std::invalid_argument("expected n prescribed W-ratio values");
    if (b.size() != g.phis.size())
        throw std::invalid_argument("expected one prescribed value per generator phi");

    const unsigned prec = signature_precision(g);
    auto pt = curve_series_point(curve, t0, prec);
    Series p_val = group_p_value(g, pt);
    if (p_val.value() == 0) throw DegeneracyError("p vanishes at the evaluation point");
    auto reparam = pt.reparam(p_val);

    std::vector<Rational> residuals;

    // ODE residual per coordinate: delta^{n+1} x_m + sum_i (-1)^{n+1-i} a_i delta^i x_m.
    for (unsigned m = 1; m <= n; ++m) {
        Rational r = reparam.jet(VarKey::x(m, n + 1)).value();
        for (unsigned i = 1; i <= n; ++i) {
            Rational ai = a[i - 1].evaluate(t0);
            Rational term = ai * reparam.jet(VarKey::x(m, i)).value();
            r += ((n + 1 - i) % 2 == 0) ? term : -term;
        }
        residuals.push_back(r);
    }

    // Generator matching: phi_j(x, delta x, ..., delta^n x) - b_j.
    auto phis = phi_on_jets(g);
    for (unsigned j = 0; j < phis.size(); ++j)
        residuals.push_back(reparam.value(phis[j]).value() - b[j].evaluate(t0));

    // pbar<a,b> - 1 with the derivation delta, when the catalog provides pbar.
    if (g.pbar) {
        std::map<VarKey, Series> tbase;
        const auto& sources = (g.pbar_binding == PbarBinding::WRatios) ? a : b;
        for (unsigned i = 0; i < sources.size(); ++i)
            tbase.emplace(VarKey::t(i + 1), Series::from_jets(jets_at(sources[i], t0, prec - 1)));
        DiffValuePoint<Series> tpt(std::move(tbase), reparam.mult());
        residuals.push_back(tpt.value(*g.pbar).value() - 1);
    }
    return residuals;
}

} // namespace diffinv
