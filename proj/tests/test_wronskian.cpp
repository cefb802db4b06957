#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffinv/eval.hpp"
#include "diffinv/wronskian.hpp"
#include "helpers.hpp"

using namespace diffinv;
using namespace diffinv::testing;

namespace {

UniRational upoly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniRational(UniPoly(std::move(c)));
}

CurveSpec cusp_curve() { return {{upoly({0, 0, 1}), upoly({0, 0, 0, 1})}}; } // (t^2, t^3)
CurveSpec parabola() { return {{upoly({0, 1}), upoly({0, 0, 1})}}; }         // (t, t^2)

} // namespace

TEST_CASE("determinants") {
    PolyMatrix id2{{DiffPolynomial(rat(1)), DiffPolynomial()},
                   {DiffPolynomial(), DiffPolynomial(rat(1))}};
    CHECK(det(id2) == DiffPolynomial(rat(1)));

    PolyMatrix jets{{pvar(X(1, 1)), pvar(X(1, 2))}, {pvar(X(2, 1)), pvar(X(2, 2))}};
    CHECK(det(jets) == pvar(X(1, 1)) * pvar(X(2, 2)) - pvar(X(1, 2)) * pvar(X(2, 1)));

    PolyMatrix repeated{{pvar(X(1, 1)), pvar(X(1, 1))}, {pvar(X(2, 1)), pvar(X(2, 1))}};
    CHECK(det(repeated).is_zero());
}

TEST_CASE("bareiss path agrees with Laplace expansion on 5x5") {
    Rng rng(555);
    for (int trial = 0; trial < 3; ++trial) {
        PolyMatrix m(5, std::vector<DiffPolynomial>(5));
        for (auto& row : m)
            for (auto& e : row) e = random_poly(rng, 2, 1, false, 2);
        DiffPolynomial laplace;
        for (unsigned r = 0; r < 5; ++r) {
            PolyMatrix sub;
            for (unsigned i = 0; i < 5; ++i) {
                if (i == r) continue;
                sub.push_back({m[i][1], m[i][2], m[i][3], m[i][4]});
            }
            DiffPolynomial contrib = m[r][0] * det(sub);
            laplace = (r % 2 == 0) ? laplace + contrib : laplace - contrib;
        }
        CHECK(det(m) == laplace);
    }
    PolyMatrix rep(5, std::vector<DiffPolynomial>(5));
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned j = 0; j < 5; ++j) rep[i][j] = pvar(X(1 + (j % 2), i + 1));
    CHECK(det(rep).is_zero());
}

TEST_CASE("rational determinant clears denominators") {
    RationalMatrix m{{rvar(X(1, 1)) / rvar(X(1)), rvar(X(1, 2))},
                     {rvar(X(2, 1)), rvar(X(2, 2)) / rvar(X(2))}};
    DiffRational expect = (rvar(X(1, 1)) / rvar(X(1))) * (rvar(X(2, 2)) / rvar(X(2))) -
                          rvar(X(1, 2)) * rvar(X(2, 1));
    CHECK(det(m) == expect);
}

TEST_CASE("wronskian and minors, symbolic forms") {
    CHECK(wronskian(2) == pvar(X(1, 1)) * pvar(X(2, 2)) - pvar(X(2, 1)) * pvar(X(1, 2)));
    CHECK(wronskian_minor(2, 2) ==
          pvar(X(1, 1)) * pvar(X(2, 3)) - pvar(X(2, 1)) * pvar(X(1, 3)));
    CHECK(wronskian_minor(2, 3) == wronskian(2));
    CHECK_THROWS_AS(wronskian_minor(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(wronskian_minor(2, 0), std::invalid_argument);
}

TEST_CASE("wronskian on concrete curves") {
    CurveSpec cusp = cusp_curve();
    for (long t : {1L, 2L, 3L}) {
        Assignment jets = jets_of_curve(cusp, rat(t), 3);
        CHECK(wronskian(2).evaluate(jets) == rat(6 * t * t));
        CHECK(wronskian_minor(2, 2).evaluate(jets) == rat(12 * t));
        CHECK(wronskian_minor(2, 1).evaluate(jets) == rat(12));
    }
    CurveSpec flat = parabola();
    Assignment jets = jets_of_curve(flat, rat(5), 3);
    CHECK(wronskian(2).evaluate(jets) == rat(2));
    CHECK(wronskian_minor(2, 1).evaluate(jets).get_num() == 0);
    CHECK(wronskian_minor(2, 2).evaluate(jets).get_num() == 0);
}

TEST_CASE("alternating minor sum equals the bordered determinant") {
    for (unsigned n = 2; n <= 3; ++n) {
        DiffRational sum = alternating_minor_sum(n, VarKey::y());
        CHECK(sum == DiffRational(wronskian_with_row(n, VarKey::y())));
    }
}

TEST_CASE("predicted minor transforms, closed forms") {
    DiffRational g = rvar(VarKey::g());
    DiffRational dg = rvar(VarKey::g(1));
    // j = n+1 collapses to g^{-n(n+1)/2} W.
    CHECK(predicted_minor_transform(2, 3) ==
          DiffRational(wronskian(2)) / DiffRational(pvar(VarKey::g(), 3)));
    CHECK(predicted_minor_transform(3, 4) ==
          DiffRational(wronskian(3)) / DiffRational(pvar(VarKey::g(), 6)));
    // j = n at n = 2: g^-4 (W_2 - 3 (dg/g) W).
    DiffRational expect2 = (DiffRational(wronskian_minor(2, 2)) -
                            (dg / g) * DiffRational(wronskian(2)) * rat(3)) /
                           DiffRational(pvar(VarKey::g(), 4));
    CHECK(predicted_minor_transform(2, 2) == expect2);
    // General-n display at n = 3: g^{-7} (W_3 - 6 (dg/g) W).
    DiffRational expect3 = (DiffRational(wronskian_minor(3, 3)) -
                            (dg / g) * DiffRational(wronskian(3)) * rat(6)) /
                           DiffRational(pvar(VarKey::g(), 7));
    CHECK(predicted_minor_transform(3, 3) == expect3);
}

TEST_CASE("minor transformation law, symbolic at n = 2") {
    for (unsigned j = 1; j <= 3; ++j) {
        IdentityPair pair = minor_law_pair(2, j);
        CHECK(verify_identity(pair.name, pair.lhs, pair.rhs, RunMode::Symbolic).passed());
    }
}

TEST_CASE("minor transformation law by exact evaluation at n = 2, 3") {
    EvalOptions opts;
    opts.trials = 5;
    opts.seed = 20240601;
    for (unsigned n = 2; n <= 3; ++n) {
        for (unsigned j = 1; j <= n + 1; ++j) {
            IdentityPair pair = minor_law_pair(n, j);
            auto report = verify_identity(pair.name, pair.lhs, pair.rhs,
                                          RunMode::Evaluation, opts);
            INFO(pair.name);
            CHECK(report.passed());
        }
    }
}

TEST_CASE("the displayed transformation laws") {
    EvalOptions opts;
    opts.trials = 5;
    opts.seed = 8;
    for (unsigned n = 2; n <= 3; ++n) {
        for (auto builder : {eq2_pair, eq3_pair, eq4_pair, delta_log_pair}) {
            IdentityPair pair = builder(n);
            auto report =
                verify_identity(pair.name, pair.lhs, pair.rhs, RunMode::Evaluation, opts);
            INFO(pair.name);
            CHECK(report.passed());
        }
    }
    // Small enough to close the books symbolically at n = 2.
    IdentityPair pair = eq2_pair(2);
    CHECK(verify_identity(pair.name, pair.lhs, pair.rhs, RunMode::Symbolic).passed());
}

TEST_CASE("a perturbed law fails with a witness") {
    IdentityPair pair = eq2_pair(2);
    DiffRational wrong_rhs =
        (DiffRational(wronskian_minor(2, 2)) / DiffRational(wronskian(2)) -
         (rvar(VarKey::g(1)) / rvar(VarKey::g())) * rat(4)) /
        rvar(VarKey::g());
    EvalOptions opts;
    opts.trials = 5;
    opts.seed = 99;
    auto report = verify_identity("perturbed eq2", pair.lhs, wrong_rhs,
                                  RunMode::Evaluation, opts);
    CHECK(report.status == VerifyStatus::Fail);
    REQUIRE(report.witness.has_value());
    // The witness really separates the two sides.
    CHECK(pair.lhs.evaluate(*report.witness) != wrong_rhs.evaluate(*report.witness));
}
