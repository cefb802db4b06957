#pragma once

#include <vector>

#include "diffinv/errors.hpp"
#include "diffinv/rational.hpp"
#include "diffinv/rng.hpp"

namespace diffinv {

// Truncated power series in a local parameter around the evaluation point.
// The number of stored coefficients is the precision; arithmetic propagates
// the minimum, differentiation costs one order.  Exact arithmetic over Q
// throughout: this is the jet ring the evaluation campaigns work in.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static Series constant(const Rational& v, unsigned prec);
    // coeff_k = jet_k / k!, so differentiation matches jet shifting.
    static Series from_jets(const std::vector<Rational>& jets);

    unsigned precision() const { return static_cast<unsigned>(c_.size()); }
    const Rational& at(unsigned i) const;
    // The value at the point: the order-zero coefficient.
    const Rational& value() const { return at(0); }
    bool is_zero() const; // all stored coefficients zero

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Rational& c) const;
    Series operator/(const Series& o) const { return *this * o.inverse(); }

    // Throws DegeneracyError when the constant term vanishes.
    Series inverse() const;
    Series pow(unsigned e) const;

private:
    std::vector<Rational> c_;
};

inline Series operator*(const Rational& c, const Series& s) { return s * c; }

Series ddt(const Series& s); // precision drops by one

inline Series make_constant(const Series& like, const Rational& q) {
    return Series::constant(q, like.precision());
}

Series random_series(Rng& rng, unsigned prec, long range, bool nonzero_constant);

} // namespace diffinv
