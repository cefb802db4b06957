#pragma once

#include <map>

#include "diffinv/polynomial.hpp"
#include "diffinv/rational_function.hpp"

namespace diffinv {

// A point of a concrete differential field: each indeterminate gets a value
// in the ring R (Series or UniRational), and the derivation in force is
// mult * d/dt.  Jet variables evaluate to iterated derivatives of the base
// values, so evaluation intertwines the formal d with the point's
// derivation.  reparam() divides the derivation by a value of the ring --
// that is exactly what reinterpreting d as p^-1 d means on values, which is
// how nested reinterpretations are evaluated without symbolic expansion.
template <class R>
class DiffValuePoint {
public:
    DiffValuePoint(std::map<VarKey, R> base_values, R mult)
        : base_(std::move(base_values)), mult_(std::move(mult)) {}

    const R& jet(VarKey v) {
        auto it = memo_.find(v);
        if (it != memo_.end()) return it->second;
        R val = v.order == 0 ? base_value(v) : derive(jet(VarKey{v.kind, v.a, v.b, v.order - 1}));
        return memo_.emplace(v, std::move(val)).first->second;
    }

    R derive(const R& x) const { return mult_ * ddt(x); }

    R value(const DiffPolynomial& p) {
        R total = constant_like(Rational(0));
        for (const auto& [mono, coeff] : p.terms()) {
            R term = constant_like(coeff);
            for (const auto& [v, e] : mono.factors)
                for (std::uint32_t q = 0; q < e; ++q) term = term * jet(v);
            total = total + term;
        }
        return total;
    }

    R value(const DiffRational& f) { return value(f.num()) / value(f.den()); }

    DiffValuePoint reparam(const R& p_value) const {
        return DiffValuePoint(base_, mult_ / p_value);
    }

    const R& mult() const { return mult_; }

private:
    std::map<VarKey, R> base_;
    R mult_;
    std::map<VarKey, R> memo_;

    const R& base_value(VarKey v) const {
        auto it = base_.find(v);
        if (it == base_.end()) throw EvalError("no value bound to indeterminate " + v.name());
        return it->second;
    }

    // A constant of R shaped like the point's own values.
    R constant_like(const Rational& q) const { return make_constant(mult_, q); }
};

// Ring-specific constant constructors (overloads found by ADL): Series and
// UniRational each provide make_constant(like, q).

// Laplace determinant over any of the value rings (matrices stay <= 5x5).
template <class R>
R det_values(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    std::vector<std::vector<R>> sub;
    bool first = true;
    R total = m[0][0]; // placeholder, reset below
    for (std::size_t r = 0; r < n; ++r) {
        sub.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<R> row;
            for (std::size_t j = 1; j < n; ++j) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        R contrib = m[r][0] * det_values(sub);
        if (r % 2 == 1) contrib = -contrib;
        if (first) {
            total = contrib;
            first = false;
        } else {
            total = total + contrib;
        }
    }
    return total;
}

} // namespace diffinv
