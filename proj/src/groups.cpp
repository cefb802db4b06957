#include "diffinv/groups.hpp"

#include <stdexcept>

#include "diffinv/rng.hpp"
#include "diffinv/series.hpp"

namespace diffinv {

namespace {

DiffRational dot_of_blocks(unsigned n, unsigned block_a, unsigned block_b) {
    DiffPolynomial acc;
    for (unsigned i = 1; i <= n; ++i)
        acc = acc + DiffPolynomial::variable(VarKey::z(i, block_a)) *
                        DiffPolynomial::variable(VarKey::z(i, block_b));
    return DiffRational(acc);
}

DiffPolynomial block_det2(unsigned block_a, unsigned block_b) {
    return DiffPolynomial::variable(VarKey::z(1, block_a)) *
               DiffPolynomial::variable(VarKey::z(2, block_b)) -
           DiffPolynomial::variable(VarKey::z(2, block_a)) *
               DiffPolynomial::variable(VarKey::z(1, block_b));
}

DiffRational gl_affine_pbar(unsigned n) {
    long nn = n;
    DiffRational tn = DiffRational::variable(VarKey::t(n));
    DiffRational tn1 = DiffRational::variable(VarKey::t(n - 1));
    DiffRational dtn = DiffRational::variable(VarKey::t(n, 1));
    DiffRational p1_of_t = tn1 + dtn * rat(nn - 1, 3) -
                           tn * tn * rat((nn - 1) * (3 * nn + 2), 6 * nn * (nn + 1));
    return (p1_of_t.derive() / p1_of_t) * rat(nn * (nn + 1), 2) - tn * rat(2);
}

} // namespace

std::vector<std::string> builtin_group_names() {
    return {"gl-affine", "gl", "o2", "o2-affine"};
}

GroupSpec builtin_group(const std::string& name, unsigned n) {
    GroupSpec g;
    g.name = name;
    g.n = n;
    if (name == "gl-affine") {
        if (n < 2) throw std::invalid_argument("gl-affine requires n >= 2");
        g.sampler = SamplerKind::GLAffine;
        g.gl_p_variant = PVariant::LogDerivative;
        g.p = p_weight1(n, PVariant::LogDerivative).expr;
        g.pbar = gl_affine_pbar(n);
        g.pbar_binding = PbarBinding::WRatios;
        return g;
    }
    if (name == "gl") {
        if (n != 2) throw std::invalid_argument("the gl catalog entry ships for n = 2");
        g.sampler = SamplerKind::GLLinear;
        // Bracket ratios of the blocks (x, dx, d^2x): each det picks up the
        // same det(h) factor, so the ratios are invariant.
        g.phis.push_back(DiffRational(block_det2(1, 2)) / DiffRational(block_det2(2, 3)));
        g.phis.push_back(DiffRational(block_det2(1, 3)) / DiffRational(block_det2(2, 3)));
        g.gl_p_variant = PVariant::LogDerivative;
        g.p = p_weight1(n, PVariant::LogDerivative).expr;
        return g;
    }
    if (name == "o2") {
        if (n != 2) throw std::invalid_argument("o2 requires n = 2");
        g.sampler = SamplerKind::O2;
        g.phis.push_back(dot_of_blocks(2, 1, 1)); // (x, x)
        g.phis.push_back(dot_of_blocks(2, 2, 2)); // (dx, dx)
        g.p = example3_p();
        g.pbar = DiffRational::variable(VarKey::t(1, 1)) * rat(1, 2); // (1/2) d t1
        g.pbar_binding = PbarBinding::Phis;
        return g;
    }
    if (name == "o2-affine") {
        if (n != 2) throw std::invalid_argument("o2-affine requires n = 2");
        g.sampler = SamplerKind::O2Affine;
        g.phis.push_back(dot_of_blocks(2, 2, 2)); // (dx, dx)
        g.phis.push_back(dot_of_blocks(2, 3, 3)); // (d2x, d2x)
        g.p = example4_p();
        DiffRational t1 = DiffRational::variable(VarKey::t(1));
        DiffRational t2 = DiffRational::variable(VarKey::t(2));
        DiffRational dt1 = DiffRational::variable(VarKey::t(1, 1));
        g.pbar = ((t1 * t2 - dt1 * dt1 * rat(1, 4)) / (t1 * t1 * t1)).derive();
        g.pbar_binding = PbarBinding::Phis;
        return g;
    }
    throw std::invalid_argument("unknown group '" + name + "'");
}

AffineMap o2_rotation(const Rational& tau) {
    Rational den = 1 + tau * tau;
    Rational c = (1 - tau * tau) / den;
    Rational s = (2 * tau) / den;
    return AffineMap({{c, -s}, {s, c}}, {});
}

AffineMap o2_reflection(const Rational& tau) {
    Rational den = 1 + tau * tau;
    Rational c = (1 - tau * tau) / den;
    Rational s = (2 * tau) / den;
    return AffineMap({{c, s}, {s, -c}}, {});
}

AffineMap sample_element(const GroupSpec& group, std::uint64_t seed) {
    Rng rng(seed);
    const unsigned n = group.n;
    auto random_translation = [&rng, n]() {
        std::vector<Rational> h0;
        for (unsigned i = 0; i < n; ++i) h0.push_back(rng.rational(9));
        return h0;
    };
    switch (group.sampler) {
    case SamplerKind::GLAffine:
    case SamplerKind::GLLinear: {
        for (;;) {
            std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
            for (auto& row : h)
                for (auto& e : row) e = Rational(rng.int_in(-4, 4));
            try {
                return AffineMap(h, group.sampler == SamplerKind::GLAffine
                                        ? random_translation()
                                        : std::vector<Rational>{});
            } catch (const std::invalid_argument&) {
                // singular draw; redraw
            }
        }
    }
    case SamplerKind::O2:
    case SamplerKind::O2Affine: {
        Rational tau = rng.rational(9);
        AffineMap rot = rng.coin() ? o2_rotation(tau) : o2_reflection(tau);
        if (group.sampler == SamplerKind::O2) return rot;
        return AffineMap(rot.h(), random_translation());
    }
    case SamplerKind::None:
        throw std::invalid_argument("group '" + group.name + "' has no element sampler");
    }
    throw std::logic_error("unreachable");
}

std::vector<DiffRational> phi_on_jets(const GroupSpec& group) {
    std::map<VarKey, DiffRational> sub;
    auto add_block_vars = [&sub, &group](const DiffRational& phi) {
        for (const VarKey& v : phi.variables()) {
            if (v.kind != Kind::Z) continue;
            if (v.a > group.n || v.b > group.n + 1)
                throw std::invalid_argument("block variable " + v.name() +
                                            " outside the group's dimension");
            // z_{i,b} |-> d^{b-1} x_i (extra derivative orders carry over).
            sub.emplace(v, DiffRational::variable(VarKey::x(v.a, v.b - 1 + v.order)));
        }
    };
    std::vector<DiffRational> out;
    out.reserve(group.phis.size());
    for (const DiffRational& phi : group.phis) {
        sub.clear();
        add_block_vars(phi);
        out.push_back(substitute(phi, sub));
    }
    return out;
}

std::vector<DiffRational> h_generators(const GroupSpec& group) {
    std::vector<DiffRational> out = gl_generators(group.n);
    auto phis = phi_on_jets(group);
    out.insert(out.end(), phis.begin(), phis.end());
    return out;
}

DiffRational example3_p() {
    DiffPolynomial acc;
    for (unsigned i = 1; i <= 2; ++i)
        acc = acc + DiffPolynomial::variable(VarKey::x(i)) *
                        DiffPolynomial::variable(VarKey::x(i, 1));
    return DiffRational(acc);
}

DiffRational example4_p() {
    DiffPolynomial det2 = DiffPolynomial::variable(VarKey::x(1, 1)) *
                              DiffPolynomial::variable(VarKey::x(2, 2)) -
                          DiffPolynomial::variable(VarKey::x(2, 1)) *
                              DiffPolynomial::variable(VarKey::x(1, 2));
    DiffPolynomial phi1;
    for (unsigned i = 1; i <= 2; ++i)
        phi1 = phi1 + DiffPolynomial::variable(VarKey::x(i, 1), 2);
    DiffRational inner = DiffRational(det2 * det2) / DiffRational(phi1.pow(3));
    return inner.derive();
}

InvarianceReport check_H_invariance(const DiffRational& f, const GroupSpec& group,
                                    unsigned trials, std::uint64_t seed) {
    InvarianceReport report{f.str(), trials, seed, true, std::nullopt,
                            "symbolic comparison per sampled element"};
    for (unsigned trial = 0; trial < trials; ++trial) {
        AffineMap m = sample_element(group, mix_seed(seed, trial));
        if (!(act_affine(f, m) == f)) {
            report.passed = false;
            report.first_failure = trial;
            break;
        }
    }
    return report;
}

std::map<VarKey, Series> random_series_bases(const std::set<VarKey>& vars, Rng& rng,
                                             unsigned prec, long range) {
    std::map<VarKey, Series> base;
    for (const VarKey& v : vars) {
        VarKey b = v.base();
        if (!base.count(b)) base.emplace(b, random_series(rng, prec, range, false));
    }
    return base;
}

std::map<VarKey, Series> transform_series_bases(const std::map<VarKey, Series>& base,
                                                const AffineMap& m) {
    std::map<VarKey, Series> out;
    const unsigned n = m.dim();
    for (const auto& [v, s] : base) {
        if (v.kind != Kind::X) {
            out.emplace(v, s);
            continue;
        }
        Series acc = s * m.h()[v.a - 1][v.a - 1];
        for (unsigned j = 1; j <= n; ++j) {
            if (j == v.a) continue;
            acc = acc + base.at(VarKey::x(j)) * m.h()[v.a - 1][j - 1];
        }
        acc = acc + Series::constant(m.h0()[v.a - 1], s.precision());
        out.emplace(v, std::move(acc));
    }
    return out;
}

namespace {

constexpr long kCoeffRange = 9;
constexpr unsigned kRetryCap = 100;

} // namespace

InvarianceReport check_FH_invariance(const DiffRational& f, const GroupSpec& group,
                                     unsigned trials, std::uint64_t seed) {
    InvarianceReport report{f.str(), trials, seed, true, std::nullopt,
                            "exact evaluation at random differential points"};
    // Every x_1..x_n must be present in the base map even if absent from f.
    std::set<VarKey> vars = f.variables();
    for (unsigned i = 1; i <= group.n; ++i) vars.insert(VarKey::x(i));
    const unsigned prec = f.max_jet_order() + 4;
    for (unsigned trial = 0; trial < trials; ++trial) {
        bool decided = false;
        for (unsigned attempt = 0; attempt < kRetryCap && !decided; ++attempt) {
            Rng rng(mix_seed(seed, trial * 1009 + attempt));
            AffineMap m = sample_element(group, rng.next());
            try {
                auto base = random_series_bases(vars, rng, prec, kCoeffRange);
                Series g = random_series(rng, prec, kCoeffRange, true);
                DiffValuePoint<Series> rhs_point(base, Series::constant(Rational(1), prec));
                DiffValuePoint<Series> lhs_point(transform_series_bases(base, m), g.inverse());
                Rational lhs = lhs_point.value(f).value();
                Rational rhs = rhs_point.value(f).value();
                decided = true;
                if (lhs != rhs) {
                    report.passed = false;
                    report.first_failure = trial;
                }
            } catch (const EvalError&) {
                // degenerate point; redraw
            }
        }
        if (!decided) {
            report.passed = false;
            report.first_failure = trial;
            report.note = "retry cap exhausted by degenerate points";
            break;
        }
        if (!report.passed) break;
    }
    return report;
}

InvarianceReport check_FH_invariance_reparam(const DiffRational& f_dform,
                                             const GroupSpec& group, unsigned trials,
                                             std::uint64_t seed,
                                             std::optional<PVariant> variant) {
    GroupSpec g = group;
    if (variant) g.gl_p_variant = variant;
    InvarianceReport report{f_dform.str(), trials, seed, true, std::nullopt,
                            "delta-reinterpreted, exact evaluation at random points"};
    std::set<VarKey> vars = f_dform.variables();
    for (unsigned i = 1; i <= g.n; ++i) vars.insert(VarKey::x(i));
    // The p value costs about n+3 derivative orders; each delta-jet one more.
    const unsigned prec = f_dform.max_jet_order() + g.n + 10;
    for (unsigned trial = 0; trial < trials; ++trial) {
        bool decided = false;
        for (unsigned attempt = 0; attempt < kRetryCap && !decided; ++attempt) {
            Rng rng(mix_seed(seed, trial * 1009 + attempt));
            AffineMap m = sample_element(g, rng.next());
            try {
                auto base = random_series_bases(vars, rng, prec, kCoeffRange);
                Series gs = random_series(rng, prec, kCoeffRange, true);
                DiffValuePoint<Series> rhs_point(base, Series::constant(Rational(1), prec));
                DiffValuePoint<Series> lhs_point(transform_series_bases(base, m), gs.inverse());
                Series p_rhs = group_p_value(g, rhs_point);
                Series p_lhs = group_p_value(g, lhs_point);
                auto rhs_reparam = rhs_point.reparam(p_rhs);
                auto lhs_reparam = lhs_point.reparam(p_lhs);
                Rational lhs = lhs_reparam.value(f_dform).value();
                Rational rhs = rhs_reparam.value(f_dform).value();
                decided = true;
                if (lhs != rhs) {
                    report.passed = false;
                    report.first_failure = trial;
                }
            } catch (const EvalError&) {
                // degenerate point; redraw
            }
        }
        if (!decided) {
            report.passed = false;
            report.first_failure = trial;
            report.note = "retry cap exhausted by degenerate points";
            break;
        }
        if (!report.passed) break;
    }
    return report;
}

} // namespace diffinv
