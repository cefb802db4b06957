#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "diffinv/polynomial.hpp"

namespace diffinv {

// Quotient of two DiffPolynomials.  Kept with the denominator's leading
// coefficient normalized to +1 under the canonical monomial order; no
// multivariate gcd is taken, so equality goes through cross-multiplication.
class DiffRational {
public:
    DiffRational() : num_(), den_(rat(1)) {}
    explicit DiffRational(const Rational& c) : num_(c), den_(rat(1)) {}
    explicit DiffRational(long c) : num_(rat(c)), den_(rat(1)) {}
    explicit DiffRational(const DiffPolynomial& p) : num_(p), den_(rat(1)) {}
    DiffRational(DiffPolynomial num, DiffPolynomial den);

    static DiffRational variable(VarKey v, std::uint32_t exp = 1) {
        return DiffRational(DiffPolynomial::variable(v, exp));
    }

    const DiffPolynomial& num() const { return num_; }
    const DiffPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    DiffRational operator-() const;
    DiffRational operator+(const DiffRational& o) const;
    DiffRational operator-(const DiffRational& o) const;
    DiffRational operator*(const DiffRational& o) const;
    DiffRational operator/(const DiffRational& o) const;
    DiffRational operator*(const Rational& c) const;

    DiffRational reciprocal() const;
    DiffRational pow(int e) const;

    // Value equality by cross-multiplication: num*o.den == o.num*den.
    friend bool operator==(const DiffRational& a, const DiffRational& b);
    friend bool operator!=(const DiffRational& a, const DiffRational& b) { return !(a == b); }

    // Quotient rule: (num' den - num den') / den^2.
    DiffRational derive() const;

    Rational evaluate(const Assignment& point) const;

    std::set<VarKey> variables() const;
    std::optional<std::uint32_t> order_in(unsigned i) const;
    std::uint32_t max_jet_order() const;

    std::string str() const;

private:
    DiffPolynomial num_;
    DiffPolynomial den_;

    void normalize();
};

inline DiffRational operator*(const Rational& c, const DiffRational& f) { return f * c; }

// Substitution of whole values for jet variables, assembled over a common
// denominator (no gcd).  Variables absent from the map stay symbolic.
DiffRational substitute(const DiffPolynomial& p, const std::map<VarKey, DiffRational>& sub);
DiffRational substitute(const DiffRational& f, const std::map<VarKey, DiffRational>& sub);
DiffPolynomial substitute_poly(const DiffPolynomial& p,
                               const std::map<VarKey, DiffPolynomial>& sub);

} // namespace diffinv
