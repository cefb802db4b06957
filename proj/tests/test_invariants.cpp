#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffinv/checks.hpp"
#include "diffinv/eval.hpp"
#include "diffinv/expr.hpp"
#include "diffinv/invariants.hpp"
#include "helpers.hpp"

using namespace diffinv;
using namespace diffinv::testing;

namespace {

CurveSpec cusp_curve() { return parse_curve_text("t^2\nt^3\n"); }

EvalOptions fast_opts(unsigned trials, std::uint64_t seed) {
    EvalOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    return opts;
}

} // namespace

TEST_CASE("p1 at n = 2 has the substituted coefficients") {
    WeightedInvariant inv = p1(2);
    CHECK(inv.weight == 2);
    DiffRational expect = w_ratio(2, 1) + w_ratio(2, 2).derive() * rat(1, 3) -
                          w_ratio(2, 2) * w_ratio(2, 2) * rat(2, 9);
    CHECK(inv.expr == expect);
    CHECK(inv.formula.find("1/3") != std::string::npos);
    CHECK(inv.formula.find("2/9") != std::string::npos);
    CHECK_THROWS_AS(p1(1), std::invalid_argument);
}

TEST_CASE("p1 on the curve (t^2, t^3) is 4/(9 t^2)") {
    CurveSpec curve = cusp_curve();
    DiffRational expr = p1(2).expr;
    for (long t : {1L, 2L, 5L}) {
        Assignment jets = jets_of_curve(curve, rat(t), 4);
        CHECK(expr.evaluate(jets) == rat(4, 9 * t * t));
    }
}

TEST_CASE("p (log-derivative) on the curve (t^2, t^3) is -10/t") {
    CurveSpec curve = cusp_curve();
    DiffRational expr = p_weight1(2, PVariant::LogDerivative).expr;
    for (long t : {1L, 2L, 3L}) {
        Assignment jets = jets_of_curve(curve, rat(t), 5);
        CHECK(expr.evaluate(jets) == rat(-10, t));
    }
}

TEST_CASE("replaying the substitution recipe on the eq3 bracket gives p1") {
    for (unsigned n = 2; n <= 4; ++n) {
        long nn = n;
        DiffRational sigma = w_ratio(n, n) * rat(2, nn * (nn + 1));
        CHECK(substitute_s_jets(eq3_bracket_in_s(n), sigma) == p1(n).expr);
    }
}

TEST_CASE("p2 requires n >= 3; its n = 3 falling factorial is 24") {
    CHECK_THROWS_AS(p2(2), std::invalid_argument);
    // (n+1)n(n-1)(n-2) = 24 at n = 3, so the D(s,2) coefficient is 24/24 = 1.
    WeightedInvariant inv = p2(3);
    CHECK(inv.weight == 3);
    CHECK(inv.formula.find("(1)*D(s,2)") != std::string::npos);
}

TEST_CASE("weight laws by exact random draws") {
    CHECK(run_check({"weight", "p1", 2, RunMode::Evaluation, true, fast_opts(20, 5)}).passed());
    CHECK(run_check({"weight", "p1", 3, RunMode::Evaluation, true, fast_opts(20, 6)}).passed());
    CHECK(run_check({"weight", "p-log", 2, RunMode::Evaluation, true, fast_opts(20, 7)}).passed());
    CHECK(run_check({"weight", "p2", 3, RunMode::Evaluation, true, fast_opts(20, 8)}).passed());
    CHECK(
        run_check({"weight", "p-ratio", 3, RunMode::Evaluation, true, fast_opts(20, 9)}).passed());
}

TEST_CASE("a wrong weight fails the law") {
    // Run p1 as if it had weight 3: the same draw must separate the sides.
    WeightedInvariant inv = p1(2);
    GroupSpec sampler;
    sampler.n = 2;
    sampler.sampler = SamplerKind::GLAffine;
    Rng rng(123);
    AffineMap m = sample_element(sampler, rng.next());
    const unsigned prec = inv.expr.max_jet_order() + 3;
    std::set<VarKey> vars = inv.expr.variables();
    auto base = random_series_bases(vars, rng, prec, 9);
    Series g = random_series(rng, prec, 9, true);
    DiffValuePoint<Series> rhs_point(base, Series::constant(rat(1), prec));
    DiffValuePoint<Series> lhs_point(transform_series_bases(base, m), g.inverse());
    Rational lhs = lhs_point.value(inv.expr).value();
    CHECK(lhs == rat_pow(g.at(0), -2) * rhs_point.value(inv.expr).value());
    CHECK(lhs != rat_pow(g.at(0), -3) * rhs_point.value(inv.expr).value());
}

TEST_CASE("normalization p^delta = 1") {
    CHECK(run_check({"normalization", "p-log", 2, RunMode::Evaluation, true, fast_opts(5, 11)})
              .passed());
    CHECK(run_check({"normalization", "p-log", 3, RunMode::Evaluation, true, fast_opts(5, 12)})
              .passed());
    CHECK(run_check({"normalization", "p-ratio", 3, RunMode::Evaluation, true, fast_opts(5, 13)})
              .passed());
}

TEST_CASE("normalized_derivation carries the chosen p") {
    DerivationSpec spec = normalized_derivation(2, PVariant::LogDerivative);
    CHECK(spec.kind() == DerivationKind::PReparam);
    CHECK(spec.p() == p_weight1(2, PVariant::LogDerivative).expr);
}

TEST_CASE("gl generators") {
    auto gens = gl_generators(2);
    REQUIRE(gens.size() == 2);
    CurveSpec curve = cusp_curve();
    for (long t : {1L, 2L}) {
        Assignment jets = jets_of_curve(curve, rat(t), 3);
        CHECK(gens[0].evaluate(jets) == rat(2, t * t)); // W_1/W
        CHECK(gens[1].evaluate(jets) == rat(2, t));     // W_2/W
    }
    Rng rng(17);
    GroupSpec sampler;
    sampler.n = 2;
    sampler.sampler = SamplerKind::GLAffine;
    for (int trial = 0; trial < 10; ++trial) {
        AffineMap m = sample_element(sampler, rng.next());
        for (const auto& gen : gens) CHECK(act_affine(gen, m) == gen);
    }
}

TEST_CASE("theorem2 residual vanishes for the coordinates and constants") {
    for (unsigned n = 2; n <= 3; ++n) {
        for (const auto& spec : {DerivationSpec::base(), DerivationSpec::g_reparam()}) {
            if (n == 3 && spec.kind() == DerivationKind::GReparam) continue;
            for (unsigned j = 1; j <= n; ++j)
                CHECK(theorem2_residual(n, rvar(X(j)), spec).is_zero());
            CHECK(theorem2_residual(n, DiffRational(1), spec).is_zero());
        }
    }
    CHECK(run_check({"theorem2", "", 2, RunMode::Symbolic, true, {}}).passed());
    CHECK(run_check({"theorem2", "", 3, RunMode::Symbolic, true, {}}).passed());
}

TEST_CASE("theorem2 residual is generically nonzero for x1^2") {
    DiffRational resid = theorem2_residual(2, rvar(X(1)) * rvar(X(1)), DerivationSpec::base());
    CHECK_FALSE(resid.is_zero());
    Rng rng(2718);
    Assignment a;
    for (const VarKey& v : resid.variables()) a[v] = rng.rational(9);
    CHECK(resid.evaluate(a) != 0);
}

TEST_CASE("series values match the symbolic expressions") {
    // The value engine and the symbolic builders are independent routes;
    // pin them against each other at random points.
    Rng rng(808);
    for (int trial = 0; trial < 5; ++trial) {
        std::set<VarKey> vars = {X(1), X(2)};
        auto base = random_series_bases(vars, rng, 12, 9);
        DiffValuePoint<Series> pt(base, Series::constant(rat(1), 12));
        try {
            Rational via_engine = value_p1(2, pt).value();
            Rational via_expr = pt.value(p1(2).expr).value();
            CHECK(via_engine == via_expr);
            Rational p_engine = value_p(2, PVariant::LogDerivative, pt).value();
            Rational p_expr = pt.value(p_weight1(2, PVariant::LogDerivative).expr).value();
            CHECK(p_engine == p_expr);
        } catch (const EvalError&) {
            continue; // degenerate draw
        }
    }
}

TEST_CASE("realization residuals") {
    GroupSpec group = builtin_group("gl-affine", 2);
    CurveSpec curve = cusp_curve();
    const Rational t0 = rat(1);

    // Targets computed from the curve itself: the delta-jets as univariate
    // functions, assembled through the Q(t) point.
    auto fpt = curve_function_point(curve);
    UniRational p_val = group_p_value(group, fpt);
    auto freparam = fpt.reparam(p_val);
    std::vector<UniRational> a;
    for (unsigned i = 1; i <= 2; ++i) a.push_back(value_w_ratio(2, i, freparam));
    std::vector<UniRational> b; // no phis in the gl-affine catalog

    auto residuals = realization_residuals(curve, t0, a, b, group);
    REQUIRE(residuals.size() == 3); // two ODE rows + the pbar relation
    for (const auto& r : residuals) CHECK(r == 0);

    // Perturbing a target makes the ODE rows move.
    std::vector<UniRational> a_bad = a;
    a_bad[0] = a_bad[0] + UniRational(rat(1));
    auto bad = realization_residuals(curve, t0, a_bad, b, group);
    CHECK(bad[0] != 0);
    CHECK(bad[1] != 0);

    // A different curve against this curve's targets: some residual is nonzero.
    CurveSpec other = parse_curve_text("t\nt^3\n");
    auto foreign = realization_residuals(other, t0, a, b, group);
    bool some_nonzero = false;
    for (const auto& r : foreign) some_nonzero = some_nonzero || r != 0;
    CHECK(some_nonzero);
}

TEST_CASE("realization residuals flag a perturbed phi target") {
    GroupSpec group = builtin_group("o2-affine", 2);
    CurveSpec curve = parse_curve_text("t\nt^2\n");
    const Rational t0 = rat(1);

    auto fpt = curve_function_point(curve);
    UniRational p_val = group_p_value(group, fpt);
    auto freparam = fpt.reparam(p_val);
    std::vector<UniRational> a;
    for (unsigned i = 1; i <= 2; ++i) a.push_back(value_w_ratio(2, i, freparam));
    std::vector<UniRational> b;
    for (const auto& phi : phi_on_jets(group)) b.push_back(freparam.value(phi));

    auto residuals = realization_residuals(curve, t0, a, b, group);
    REQUIRE(residuals.size() == 5); // 2 ODE + 2 phi + pbar
    for (const auto& r : residuals) CHECK(r == 0);

    std::vector<UniRational> b_bad = b;
    b_bad[1] = b_bad[1] + UniRational(rat(1));
    auto bad = realization_residuals(curve, t0, a, b_bad, group);
    CHECK(bad[0] == 0);
    CHECK(bad[1] == 0);
    CHECK(bad[2] == 0);
    CHECK(bad[3] == rat(-1)); // exactly the phi_2 matching residual moves
}
