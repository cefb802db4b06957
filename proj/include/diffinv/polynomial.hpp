#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diffinv/errors.hpp"
#include "diffinv/rational.hpp"
#include "diffinv/varkey.hpp"

namespace diffinv {

// Power product of jet variables.  Factors are sorted by VarKey and carry
// strictly positive exponents; the empty product is 1.  The canonical
// monomial order used throughout is the lexicographic order on the sorted
// (VarKey, exponent) sequence.
struct Monomial {
    std::vector<std::pair<VarKey, std::uint32_t>> factors;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    static Monomial one() { return {}; }
    static Monomial variable(VarKey v, std::uint32_t exp = 1);

    bool is_one() const { return factors.empty(); }
    unsigned degree() const;
    std::uint32_t exponent_of(VarKey v) const;

    Monomial times(const Monomial& other) const;
    Monomial pow(std::uint32_t e) const;
    // Exact variable-wise quotient, or nullopt when not divisible.
    std::optional<Monomial> divide(const Monomial& other) const;

    std::string str() const;
};

// Graded-lex comparison (total degree first, then lex with the smallest
// VarKey most significant).  This is a genuine monomial order, used only by
// the exact-division routine behind fraction-free elimination; storage and
// the leading-coefficient convention use the canonical order above.
bool grlex_less(const Monomial& a, const Monomial& b);

using Assignment = std::map<VarKey, Rational>;

// Sparse exact-rational polynomial in jet variables.  Immutable in use: all
// operations return new values, no zero coefficients are ever stored.
class DiffPolynomial {
public:
    DiffPolynomial() = default;
    explicit DiffPolynomial(const Rational& c);
    explicit DiffPolynomial(long c) : DiffPolynomial(rat(c)) {}

    static DiffPolynomial variable(VarKey v, std::uint32_t exp = 1);
    static DiffPolynomial term(const Rational& c, const Monomial& m);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Constant term (0 when absent).
    Rational constant_value() const;

    DiffPolynomial operator-() const;
    DiffPolynomial operator+(const DiffPolynomial& o) const;
    DiffPolynomial operator-(const DiffPolynomial& o) const;
    DiffPolynomial operator*(const DiffPolynomial& o) const;
    DiffPolynomial operator*(const Rational& c) const;
    DiffPolynomial pow(std::uint32_t e) const;

    friend bool operator==(const DiffPolynomial& a, const DiffPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // The derivation d: additive, Leibniz, raises jet orders by one and
    // kills constants.
    DiffPolynomial derive() const;

    Rational evaluate(const Assignment& point) const;

    std::set<VarKey> variables() const;
    // Max k such that d^k x_i occurs; nullopt when x_i is absent.
    std::optional<std::uint32_t> order_in(unsigned i) const;
    // Max derivative order over all variables (0 for constants).
    std::uint32_t max_jet_order() const;
    unsigned total_degree() const;

    // Greatest term under the canonical monomial order; polynomial must be
    // nonzero.
    const std::pair<const Monomial, Rational>& leading() const;

    std::string str() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    std::map<Monomial, Rational> terms_;
};

inline DiffPolynomial operator*(const Rational& c, const DiffPolynomial& p) { return p * c; }

// Exact quotient num/div, or nullopt when div does not divide num.
std::optional<DiffPolynomial> try_divide_exact(const DiffPolynomial& num,
                                               const DiffPolynomial& div);

} // namespace diffinv
