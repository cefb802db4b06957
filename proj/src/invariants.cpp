#include "diffinv/invariants.hpp"

#include <stdexcept>

namespace diffinv {

std::string variant_name(PVariant v) {
    return v == PVariant::LogDerivative ? "log-derivative" : "ratio";
}

DiffRational w_ratio(unsigned n, unsigned i) {
    return DiffRational(wronskian_minor(n, i)) / DiffRational(wronskian(n));
}

WeightedInvariant p1(unsigned n) {
    if (n < 2) throw std::invalid_argument("p1 requires n >= 2");
    long nn = n;
    DiffRational rn1 = w_ratio(n, n - 1);
    DiffRational rn = w_ratio(n, n);
    Rational c1 = rat(nn - 1, 3);
    Rational c2 = rat((nn - 1) * (3 * nn + 2), 6 * nn * (nn + 1));
    DiffRational expr = rn1 + rn.derive() * c1 - rn * rn * c2;
    std::string formula = "W[" + std::to_string(n - 1) + "]/W + (" + rat_str(c1) + ")*D(W[" +
                          std::to_string(n) + "]/W) - (" + rat_str(c2) + ")*(W[" +
                          std::to_string(n) + "]/W)^2";
    return {"p1", expr, 2, formula};
}

DiffRational eq3_bracket_in_s(unsigned n) {
    if (n < 2) throw std::invalid_argument("the bracket requires n >= 2");
    long nn = n;
    DiffRational s = DiffRational::variable(VarKey::s());
    DiffRational ds = DiffRational::variable(VarKey::s(1));
    DiffRational rn1 = w_ratio(n, n - 1);
    DiffRational rn = w_ratio(n, n);
    return rn1 - rn * s * rat(nn * (nn - 1), 2) + ds * rat((nn - 1) * nn * (nn + 1), 6) +
           s * s * rat((nn - 1) * nn * (nn + 1) * (3 * nn - 2), 24);
}

DiffRational minor2_bracket_in_s(unsigned n) {
    if (n < 3) throw std::invalid_argument("the W_{n-2} bracket requires n >= 3");
    long nn = n;
    DiffRational s = DiffRational::variable(VarKey::s());
    DiffRational ds = DiffRational::variable(VarKey::s(1));
    DiffRational d2s = DiffRational::variable(VarKey::s(2));
    DiffRational rn2 = w_ratio(n, n - 2);
    DiffRational rn1 = w_ratio(n, n - 1);
    DiffRational rn = w_ratio(n, n);
    // (n+1)!/(n-3)! as a falling factorial; no negative-argument factorial.
    const long ff = (nn + 1) * nn * (nn - 1) * (nn - 2);
    return rn2 - rn1 * s * rat((nn - 1) * (nn - 2), 2) +
           (ds * rat((nn - 2) * (nn - 1) * nn, 6) +
            s * s * rat((nn - 2) * (nn - 1) * nn * (3 * nn - 5), 24)) *
               rn -
           (d2s * rat(ff, 24) + s * ds * rat((2 * nn - 3) * ff, 24) +
            s * s * s * rat((nn - 1) * (nn - 2) * ff, 48));
}

DiffRational substitute_s_jets(const DiffRational& f, const DiffRational& sigma) {
    std::map<VarKey, DiffRational> sub;
    DiffRational value = sigma;
    std::uint32_t max_order = 0;
    for (const VarKey& v : f.variables())
        if (v.kind == Kind::S) max_order = std::max(max_order, v.order);
    sub.emplace(VarKey::s(0), value);
    for (std::uint32_t k = 1; k <= max_order; ++k) {
        value = value.derive();
        sub.emplace(VarKey::s(k), value);
    }
    return substitute(f, sub);
}

WeightedInvariant p2(unsigned n) {
    if (n < 3) throw std::invalid_argument("p2 requires n >= 3");
    long nn = n;
    DiffRational sigma = w_ratio(n, n) * rat(2, nn * (nn + 1));
    DiffRational expr = substitute_s_jets(minor2_bracket_in_s(n), sigma);
    const long ff = (nn + 1) * nn * (nn - 1) * (nn - 2);
    std::string formula =
        "W[" + std::to_string(n - 2) + "]/W - (" + rat_str(rat((nn - 1) * (nn - 2), 2)) +
        ")*(W[" + std::to_string(n - 1) + "]/W)*s + ((" +
        rat_str(rat((nn - 2) * (nn - 1) * nn, 6)) + ")*D(s) + (" +
        rat_str(rat((nn - 2) * (nn - 1) * nn * (3 * nn - 5), 24)) + ")*s^2)*(W[" +
        std::to_string(n) + "]/W) - ((" + rat_str(rat(ff, 24)) + ")*D(s,2) + (" +
        rat_str(rat((2 * nn - 3) * ff, 24)) + ")*s*D(s) + (" +
        rat_str(rat((nn - 1) * (nn - 2) * ff, 48)) + ")*s^3)  with  s = (" +
        rat_str(rat(2, nn * (nn + 1))) + ")*W[" + std::to_string(n) + "]/W";
    return {"p2", expr, 3, formula};
}

WeightedInvariant p_weight1(unsigned n, PVariant variant) {
    long nn = n;
    if (variant == PVariant::LogDerivative) {
        if (n < 2) throw std::invalid_argument("the log-derivative p requires n >= 2");
        WeightedInvariant q1 = p1(n);
        Rational c = rat(nn * (nn + 1), 2);
        DiffRational expr = (q1.expr.derive() / q1.expr) * c - w_ratio(n, n) * rat(2);
        std::string formula = "(" + rat_str(c) + ")*D(p1)/p1 - 2*W[" + std::to_string(n) + "]/W";
        return {"p", expr, 1, formula};
    }
    if (n < 3) throw std::invalid_argument("the ratio p requires n >= 3");
    WeightedInvariant q1 = p1(n);
    WeightedInvariant q2 = p2(n);
    return {"p", q2.expr / q1.expr, 1, "p2/p1"};
}

DerivationSpec normalized_derivation(unsigned n, PVariant variant) {
    return DerivationSpec::p_reparam(p_weight1(n, variant).expr);
}

std::vector<DiffRational> gl_generators(unsigned n) {
    if (n < 2) throw std::invalid_argument("gl_generators requires n >= 2");
    std::vector<DiffRational> out;
    out.reserve(n);
    for (unsigned i = 1; i <= n; ++i) out.push_back(w_ratio(n, i));
    return out;
}

DiffRational theorem2_residual(unsigned n, const DiffRational& y_expr,
                               const DerivationSpec& spec) {
    DiffRational w_delta = reinterpret(wronskian(n), spec);
    DiffRational total;
    DiffRational delta_y = y_expr;
    for (unsigned i = 1; i <= n + 1; ++i) {
        delta_y = delta_apply(delta_y, spec);
        DiffRational term =
            (reinterpret(wronskian_minor(n, i), spec) / w_delta) * delta_y;
        total = ((n + 1 - i) % 2 == 0) ? total + term : total - term;
    }
    return total;
}

} // namespace diffinv
