#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffinv/eval.hpp"
#include "diffinv/expr.hpp"
#include "diffinv/wronskian.hpp"
#include "helpers.hpp"

using namespace diffinv;
using namespace diffinv::testing;

namespace {

CurveSpec cusp_curve() { return parse_curve_text("t^2\nt^3\n"); }

} // namespace

TEST_CASE("jets of concrete curves") {
    CurveSpec c = parse_curve_text("t\nt^2\n");
    Assignment jets = jets_of_curve(c, rat(1), 2);
    CHECK(jets[X(1)] == 1);
    CHECK(jets[X(2)] == 1);
    CHECK(jets[X(1, 1)] == 1);
    CHECK(jets[X(2, 1)] == 2);
    CHECK(jets[X(1, 2)] == 0);
    CHECK(jets[X(2, 2)] == 2);

    CurveSpec cusp = cusp_curve();
    Assignment j3 = jets_of_curve(cusp, rat(1), 3);
    CHECK(j3[X(1, 1)] == 2);
    CHECK(j3[X(2, 1)] == 3);
    CHECK(j3[X(1, 2)] == 2);
    CHECK(j3[X(2, 2)] == 6);
    CHECK(j3[X(1, 3)] == 0);
    CHECK(j3[X(2, 3)] == 6);

    CurveSpec pole = parse_curve_text("1/t\nt\n");
    CHECK_THROWS_AS(jets_of_curve(pole, rat(0), 1), EvalError);
}

TEST_CASE("chain-rule bridge: reparametrized jets evaluate composed-curve jets") {
    // v(s) = c(phi(s)) with phi(s) = s/(2-s); at s0 = 1, phi = 1.  Binding
    // the g-jets to the jets of phi' makes the reinterpreted jet variables
    // take the values of the d^k c at phi(s0).  This is the lemma behind the
    // signature equivalence: delta_g-jets of the composite are d-jets of the
    // original.
    CurveSpec c = cusp_curve();
    UniRational phi(UniPoly({rat(0), rat(1)}), UniPoly({rat(2), rat(-1)}));
    const Rational s0 = rat(1);
    const Rational t0 = phi.evaluate(s0);
    REQUIRE(t0 == 1);

    CurveSpec composed;
    for (const auto& coord : c.coords) composed.coords.push_back(compose(coord, phi));

    const unsigned max_order = 4;
    Assignment bind = jets_of_curve(composed, s0, max_order);
    UniRational dphi = phi.derive();
    auto phi_jets = jets_at(dphi, s0, max_order);
    for (unsigned k = 0; k <= max_order; ++k) bind[VarKey::g(k)] = phi_jets[k];

    Assignment direct = jets_of_curve(c, t0, max_order);
    auto g_spec = DerivationSpec::g_reparam();
    for (unsigned i = 1; i <= 2; ++i) {
        for (unsigned k = 1; k <= max_order; ++k) {
            DiffRational jet = reinterpret(rvar(X(i, k)), g_spec);
            CHECK(jet.evaluate(bind) == direct[X(i, k)]);
        }
    }
}

TEST_CASE("verify_identity: symbolic and trivial passes") {
    DiffRational f = rvar(X(1)) / rvar(X(2));
    auto report = verify_identity("same", f, f, RunMode::Symbolic);
    CHECK(report.passed());
    CHECK(report.mode == RunMode::Symbolic);
    CHECK(report.describe().find("symbolically") != std::string::npos);
}

TEST_CASE("verify_identity: evaluation reports are deterministic and parallel-safe") {
    IdentityPair pair = eq2_pair(2);
    EvalOptions serial;
    serial.trials = 6;
    serial.seed = 4711;
    serial.parallel = false;
    EvalOptions parallel = serial;
    parallel.parallel = true;

    auto r1 = verify_identity(pair.name, pair.lhs, pair.rhs, RunMode::Evaluation, serial);
    auto r2 = verify_identity(pair.name, pair.lhs, pair.rhs, RunMode::Evaluation, parallel);
    CHECK(r1.passed());
    CHECK(r1.status == r2.status);
    CHECK(r1.trials_run == r2.trials_run);
    CHECK(r1.describe().find("evaluation-level evidence") != std::string::npos);

    // A failing identity must yield the same witness either way.
    DiffRational wrong = pair.rhs * rat(2);
    auto f1 = verify_identity("wrong", pair.lhs, wrong, RunMode::Evaluation, serial);
    auto f2 = verify_identity("wrong", pair.lhs, wrong, RunMode::Evaluation, parallel);
    CHECK(f1.status == VerifyStatus::Fail);
    REQUIRE(f1.witness.has_value());
    REQUIRE(f2.witness.has_value());
    CHECK(*f1.witness == *f2.witness);
}

TEST_CASE("signature of (t^2, t^3) under the affine gl group") {
    // Frozen fixture, cross-checked below against the independent Q(t)
    // chain-rule oracle: the normalized invariants of this curve are the
    // constants 3/50 and -1/2.
    CurveSpec curve = cusp_curve();
    GroupSpec group = builtin_group("gl-affine", 2);
    auto sig = invariant_signature(curve, rat(1), group);
    REQUIRE(sig.size() == 2);
    CHECK(sig[0] == rat(3, 50));
    CHECK(sig[1] == rat(-1, 2));

    // Same values at another parameter point: the curve is self-similar.
    auto sig2 = invariant_signature(curve, rat(2), group);
    CHECK(sig2 == sig);

    // Independent oracle: delta-jets as univariate rational functions.
    auto fpt = curve_function_point(curve);
    UniRational p_val = group_p_value(group, fpt);
    CHECK(p_val == UniRational(UniPoly(rat(-10)), UniPoly::variable()));
    auto reparam = fpt.reparam(p_val);
    for (unsigned i = 1; i <= 2; ++i)
        CHECK(value_w_ratio(2, i, reparam).evaluate(rat(1)) == sig[i - 1]);
}

TEST_CASE("signatures are invariant under reparametrization and group motion") {
    CurveSpec curve = parse_curve_text("t + t^3\nt^2 - 2*t\n");
    GroupSpec group = builtin_group("gl-affine", 2);

    // c2(s) = h c1(phi(s)) + h0 with phi(s) = s/(2-s), phi(1) = 1.
    UniRational phi(UniPoly({rat(0), rat(1)}), UniPoly({rat(2), rat(-1)}));
    AffineMap m({{rat(2), rat(1)}, {rat(1), rat(1)}}, {rat(5), rat(-3)});
    CurveSpec moved;
    for (unsigned i = 0; i < 2; ++i) {
        UniRational acc(m.h0()[i]);
        for (unsigned j = 0; j < 2; ++j)
            acc = acc + compose(curve.coords[j], phi) * m.h()[i][j];
        moved.coords.push_back(acc);
    }

    auto sig1 = invariant_signature(curve, rat(1), group);
    auto sig2 = invariant_signature(moved, rat(1), group);
    CHECK(sig1 == sig2);

    auto verdict = equivalence_check(moved, rat(1), curve, rat(1), group);
    CHECK(verdict.signatures_equal);

    // Perturbing one coefficient of the curve must break the signature.
    CurveSpec perturbed = parse_curve_text("t + t^3\nt^2 - 3*t\n");
    auto bad = equivalence_check(perturbed, rat(1), curve, rat(1), group);
    CHECK_FALSE(bad.signatures_equal);
    CHECK_FALSE(bad.differing.empty());

    auto self = equivalence_check(curve, rat(1), curve, rat(1), group);
    CHECK(self.signatures_equal);
}

TEST_CASE("signatures under the o2 groups agree between equivalent curves") {
    CurveSpec curve = parse_curve_text("t + 1\nt^2\n");
    GroupSpec group = builtin_group("o2-affine", 2);
    UniRational phi(UniPoly({rat(1), rat(1)})); // phi(s) = s + 1
    AffineMap m = o2_rotation(rat(1, 2));
    CurveSpec moved;
    for (unsigned i = 0; i < 2; ++i) {
        UniRational acc(rat(0));
        for (unsigned j = 0; j < 2; ++j)
            acc = acc + compose(curve.coords[j], phi) * m.h()[i][j];
        acc = acc + UniRational(rat(i == 0 ? 7 : -2));
        moved.coords.push_back(acc);
    }
    auto verdict = equivalence_check(moved, rat(1), curve, rat(2), group);
    CHECK(verdict.signatures_equal);
}

TEST_CASE("degenerate curves are reported") {
    // (t, t^2) has p1 = 0 identically: the gl invariants are undefined.
    CurveSpec flat = parse_curve_text("t\nt^2\n");
    GroupSpec group = builtin_group("gl-affine", 2);
    CHECK_THROWS_AS(invariant_signature(flat, rat(1), group), DegeneracyError);

    // A straight line kills W itself.
    CurveSpec line = parse_curve_text("t\n2*t\n");
    CHECK_THROWS_AS(invariant_signature(line, rat(1), group), DegeneracyError);
}

TEST_CASE("series jets match curve jets") {
    CurveSpec curve = cusp_curve();
    auto pt = curve_series_point(curve, rat(2), 6);
    Assignment jets = jets_of_curve(curve, rat(2), 5);
    for (unsigned i = 1; i <= 2; ++i)
        for (unsigned k = 0; k <= 5; ++k)
            CHECK(pt.jet(X(i, k)).value() == jets[X(i, k)]);
    CHECK(pt.value(DiffRational(wronskian(2))).value() ==
          wronskian(2).evaluate(jets));
}
