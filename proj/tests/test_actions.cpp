#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffinv/affine.hpp"
#include "diffinv/derivation.hpp"
#include "diffinv/groups.hpp"
#include "diffinv/phi.hpp"
#include "diffinv/wronskian.hpp"
#include "helpers.hpp"

using namespace diffinv;
using namespace diffinv::testing;

namespace {

AffineMap random_affine(Rng& rng, unsigned n, bool with_translation) {
    GroupSpec g;
    g.n = n;
    g.sampler = with_translation ? SamplerKind::GLAffine : SamplerKind::GLLinear;
    return sample_element(g, rng.next());
}

} // namespace

TEST_CASE("affine substitution on variables") {
    AffineMap swap_translate({{rat(0), rat(1)}, {rat(1), rat(0)}}, {rat(1), rat(0)});
    CHECK(act_affine(rvar(X(1)), swap_translate) == rvar(X(2)) + DiffRational(1));
    CHECK(act_affine(rvar(X(1, 1)), swap_translate) == rvar(X(2, 1)));
}

TEST_CASE("wronskian scales by det(h) under linear maps") {
    AffineMap diag({{rat(2), rat(0)}, {rat(0), rat(3)}}, {});
    DiffRational w(wronskian(2));
    CHECK(act_affine(w, diag) == w * rat(6));

    Rng rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        for (unsigned n = 2; n <= 3; ++n) {
            AffineMap m = random_affine(rng, n, true);
            DiffRational wn(wronskian(n));
            CHECK(act_affine(wn, m) == wn * m.det());
        }
    }
}

TEST_CASE("dimension mismatch is rejected") {
    AffineMap m2 = AffineMap::identity(2);
    CHECK_THROWS_AS(act_affine(rvar(X(3)), m2), std::invalid_argument);
}

TEST_CASE("group action composition and identity") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        DiffRational f = random_rational(rng, 2, 2);
        AffineMap m1 = random_affine(rng, 2, true);
        AffineMap m2 = random_affine(rng, 2, true);
        CHECK(act_affine(act_affine(f, m2), m1) == act_affine(f, m2.compose(m1)));
        CHECK(act_affine(f, AffineMap::identity(2)) == f);
        CHECK(act_affine(act_affine(f, m1), m1.inverse()) == f);
    }
}

TEST_CASE("action commutes with the derivation") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        DiffRational f = random_rational(rng, 2, 2);
        AffineMap m = random_affine(rng, 2, true);
        CHECK(act_affine(f.derive(), m) == act_affine(f, m).derive());
    }
}

TEST_CASE("delta_apply") {
    auto g_spec = DerivationSpec::g_reparam();
    DiffRational g = rvar(VarKey::g());
    CHECK(delta_apply(rvar(X(1)), g_spec) == rvar(X(1, 1)) / g);

    // Applying g^-1 d twice to x1, by hand.
    DiffRational expect(
        pvar(VarKey::g()) * pvar(X(1, 2)) - pvar(VarKey::g(1)) * pvar(X(1, 1)),
        pvar(VarKey::g(), 3));
    CHECK(delta_apply(delta_apply(rvar(X(1)), g_spec), g_spec) == expect);

    CHECK(delta_apply(DiffRational(rat(9, 2)), g_spec).is_zero());
    CHECK(delta_apply(rvar(X(1)), DerivationSpec::base()) == rvar(X(1, 1)));
}

TEST_CASE("reinterpret") {
    auto g_spec = DerivationSpec::g_reparam();
    DiffRational g = rvar(VarKey::g());
    CHECK(reinterpret(rvar(X(1, 1)) * rvar(X(2, 1)), g_spec) ==
          rvar(X(1, 1)) * rvar(X(2, 1)) / (g * g));
    DiffRational expect(
        pvar(VarKey::g()) * pvar(X(1, 2)) - pvar(VarKey::g(1)) * pvar(X(1, 1)),
        pvar(VarKey::g(), 3));
    CHECK(reinterpret(rvar(X(1, 2)), g_spec) == expect);

    Rng rng(4242);
    DiffRational f = random_rational(rng, 2, 2);
    CHECK(reinterpret(f, DerivationSpec::base()) == f);
}

TEST_CASE("reinterpret is a field homomorphism") {
    Rng rng(99);
    auto g_spec = DerivationSpec::g_reparam();
    for (int trial = 0; trial < 8; ++trial) {
        DiffRational f = random_rational(rng, 2, 1);
        DiffRational h = random_rational(rng, 2, 1);
        CHECK(reinterpret(f * h, g_spec) == reinterpret(f, g_spec) * reinterpret(h, g_spec));
        CHECK(reinterpret(f + h, g_spec) == reinterpret(f, g_spec) + reinterpret(h, g_spec));
    }
}

TEST_CASE("reinterpret with a constant multiplier rescales jets") {
    // delta = (1/2) d: every k-th jet picks up 2^-k.
    auto spec = DerivationSpec::p_reparam(DiffRational(2));
    CHECK(reinterpret(rvar(X(1, 1)), spec) == rvar(X(1, 1)) * rat(1, 2));
    CHECK(reinterpret(rvar(X(1, 3)), spec) == rvar(X(1, 3)) * rat(1, 8));
}

TEST_CASE("phi coefficients") {
    CHECK(phi_coefficient(1, 1) == pvar(VarKey::g()));
    CHECK(phi_coefficient(2, 1) == pvar(VarKey::g(1)));
    CHECK(phi_coefficient(2, 2) == pvar(VarKey::g(), 2));
    // Expanding d^3 y by hand gives 3 g dg for the middle coefficient.
    CHECK(phi_coefficient(3, 2) == rat(3) * (pvar(VarKey::g()) * pvar(VarKey::g(1))));
    CHECK_THROWS_AS(phi_coefficient(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(phi_coefficient(3, 0), std::invalid_argument);
}

TEST_CASE("phi corner identities up to k = 6") {
    for (unsigned k = 1; k <= 6; ++k) {
        CHECK(phi_coefficient(k, 1) == pvar(VarKey::g(k - 1)));
        CHECK(phi_coefficient(k, k) == pvar(VarKey::g(), k));
    }
}

TEST_CASE("phi expansion holds for k = 1..5") {
    for (unsigned k = 1; k <= 5; ++k) CHECK(check_phi_expansion(k));
}

TEST_CASE("block action invariance of the catalog phis") {
    Rng rng(31);
    GroupSpec o2 = builtin_group("o2", 2);
    GroupSpec o2a = builtin_group("o2-affine", 2);
    for (int trial = 0; trial < 10; ++trial) {
        AffineMap m = sample_element(o2, rng.next());
        for (const auto& phi : o2.phis) CHECK(act_on_blocks(phi, m) == phi);
        AffineMap ma = sample_element(o2a, rng.next());
        for (const auto& phi : o2a.phis) CHECK(act_on_blocks(phi, ma) == phi);
    }
}
