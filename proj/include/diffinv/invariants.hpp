#pragma once

#include <string>
#include <vector>

#include "diffinv/derivation.hpp"
#include "diffinv/point.hpp"
#include "diffinv/rational_function.hpp"
#include "diffinv/wronskian.hpp"

namespace diffinv {

enum class PVariant { LogDerivative, Ratio };

std::string variant_name(PVariant v);

// A rational function claiming the scaling law
//   f^{g^-1 d}<h x + h0> = g^-w f^d<x>
// for every g and every (h, h0) in the target group.
struct WeightedInvariant {
    std::string name;
    DiffRational expr;
    unsigned weight;
    // Human-readable defining formula with the n-substituted coefficients.
    std::string formula;
};

// W_i / W.
DiffRational w_ratio(unsigned n, unsigned i);

// p1 = W_{n-1}/W + (n-1)/3 d(W_n/W) - (n-1)(3n+2)/(6n(n+1)) (W_n/W)^2,
// weight 2.  Requires n >= 2.
WeightedInvariant p1(unsigned n);

// Weight 3; requires n >= 3.  Built by substituting s = 2/(n(n+1)) W_n/W
// into the bracket of the W^delta_{n-2} law.
WeightedInvariant p2(unsigned n);

// Weight 1: either n(n+1)/2 dp1/p1 - 2 W_n/W (n >= 2) or p2/p1 (n >= 3).
WeightedInvariant p_weight1(unsigned n, PVariant variant);

// The bracketed part of the W^delta_{n-1}/W^delta law with dg/g replaced by
// the indeterminate s (ds, d^2s for its derivatives).
DiffRational eq3_bracket_in_s(unsigned n);

// Same for the W^delta_{n-2} law; requires n >= 3.
DiffRational minor2_bracket_in_s(unsigned n);

// Substitute sigma for s, derive(sigma) for ds, and so on.
DiffRational substitute_s_jets(const DiffRational& f, const DiffRational& sigma);

// delta = p^-1 d with the chosen weight-1 normalizer.
DerivationSpec normalized_derivation(unsigned n, PVariant variant);

// W_1/W, ..., W_n/W.
std::vector<DiffRational> gl_generators(unsigned n);

// sum_{i=1}^{n+1} (-1)^{n+1-i} (W^delta_i / W^delta) delta^i y.
DiffRational theorem2_residual(unsigned n, const DiffRational& y_expr,
                               const DerivationSpec& spec);

// ----- value engines ------------------------------------------------------
// The same constructions evaluated directly on a differential point, without
// expanding the symbolic composites.  R is Series or UniRational.

template <class R>
R value_w(unsigned n, DiffValuePoint<R>& pt) {
    return pt.value(wronskian(n));
}

template <class R>
R value_w_ratio(unsigned n, unsigned i, DiffValuePoint<R>& pt) {
    return pt.value(wronskian_minor(n, i)) / pt.value(wronskian(n));
}

template <class R>
R value_p1(unsigned n, DiffValuePoint<R>& pt) {
    R rn1 = value_w_ratio(n, n - 1, pt);
    R rn = value_w_ratio(n, n, pt);
    long nn = n;
    return rn1 + pt.derive(rn) * rat(nn - 1, 3) -
           rn * rn * rat((nn - 1) * (3 * nn + 2), 6 * nn * (nn + 1));
}

template <class R>
R value_p2(unsigned n, DiffValuePoint<R>& pt) {
    long nn = n;
    R rn2 = value_w_ratio(n, n - 2, pt);
    R rn1 = value_w_ratio(n, n - 1, pt);
    R rn = value_w_ratio(n, n, pt);
    R s = rn * rat(2, nn * (nn + 1));
    R ds = pt.derive(s);
    R d2s = pt.derive(ds);
    long ff = (nn + 1) * nn * (nn - 1) * (nn - 2);
    return rn2 - rn1 * s * rat((nn - 1) * (nn - 2), 2) +
           (ds * rat((nn - 2) * (nn - 1) * nn, 6) +
            s * s * rat((nn - 2) * (nn - 1) * nn * (3 * nn - 5), 24)) *
               rn -
           (d2s * rat(ff, 24) + s * ds * rat((2 * nn - 3) * ff, 24) +
            s * s * s * rat((nn - 1) * (nn - 2) * ff, 48));
}

template <class R>
R value_p(unsigned n, PVariant variant, DiffValuePoint<R>& pt) {
    long nn = n;
    if (variant == PVariant::LogDerivative) {
        R v1 = value_p1(n, pt);
        R rn = value_w_ratio(n, n, pt);
        return pt.derive(v1) / v1 * rat(nn * (nn + 1), 2) - rn * rat(2);
    }
    return value_p2(n, pt) / value_p1(n, pt);
}

} // namespace diffinv
