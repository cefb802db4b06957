#pragma once

#include <string>
#include <vector>

#include "diffinv/errors.hpp"
#include "diffinv/rational.hpp"

namespace diffinv {

// Dense univariate polynomial over Q, no trailing zero coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c);
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly variable(); // t

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derive() const;
    Rational evaluate(const Rational& t) const;
    // Exact division; throws std::logic_error when the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& d) const;

    std::string str() const;

private:
    std::vector<Rational> c_;
    void trim();
};

UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic gcd, primitive PRS

// Ratio of UniPolys, reduced by gcd, monic denominator.
class UniRational {
public:
    UniRational() : num_(), den_(Rational(1)) {}
    explicit UniRational(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit UniRational(const UniPoly& p) : num_(p), den_(Rational(1)) {}
    UniRational(UniPoly num, UniPoly den);

    static UniRational variable() { return UniRational(UniPoly::variable()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    UniRational operator-() const;
    UniRational operator+(const UniRational& o) const;
    UniRational operator-(const UniRational& o) const;
    UniRational operator*(const UniRational& o) const;
    UniRational operator*(const Rational& c) const;
    UniRational operator/(const UniRational& o) const;
    bool operator==(const UniRational& o) const;

    UniRational derive() const;
    Rational evaluate(const Rational& t) const; // EvalError on a pole

    std::string str() const;

private:
    UniPoly num_;
    UniPoly den_;
    void reduce();
};

// f(g(t)).
UniRational compose(const UniRational& f, const UniRational& g);

// Values f(t0), f'(t0), ..., f^(max_order)(t0).
std::vector<Rational> jets_at(const UniRational& f, const Rational& t0, unsigned max_order);

// Free derivative so generic code can say ddt(x) for both value rings.
inline UniRational ddt(const UniRational& f) { return f.derive(); }

inline UniRational make_constant(const UniRational&, const Rational& q) {
    return UniRational(q);
}

} // namespace diffinv
