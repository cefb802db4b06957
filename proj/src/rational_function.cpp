#include "diffinv/rational_function.hpp"

#include <stdexcept>

namespace diffinv {

DiffRational::DiffRational(DiffPolynomial num, DiffPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void DiffRational::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (num_.is_zero()) {
        den_ = DiffPolynomial(rat(1));
        return;
    }
    const Rational lc = den_.leading().second;
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

DiffRational DiffRational::operator-() const {
    DiffRational out = *this;
    out.num_ = -out.num_;
    return out;
}

DiffRational DiffRational::operator+(const DiffRational& o) const {
    return DiffRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

DiffRational DiffRational::operator-(const DiffRational& o) const {
    return DiffRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

DiffRational DiffRational::operator*(const DiffRational& o) const {
    return DiffRational(num_ * o.num_, den_ * o.den_);
}

DiffRational DiffRational::operator/(const DiffRational& o) const {
    if (o.num_.is_zero()) throw std::invalid_argument("division by zero");
    return DiffRational(num_ * o.den_, den_ * o.num_);
}

DiffRational DiffRational::operator*(const Rational& c) const {
    return DiffRational(num_ * c, den_);
}

DiffRational DiffRational::reciprocal() const {
    if (num_.is_zero()) throw std::invalid_argument("reciprocal of zero");
    return DiffRational(den_, num_);
}

DiffRational DiffRational::pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    DiffRational out(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool operator==(const DiffRational& a, const DiffRational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

DiffRational DiffRational::derive() const {
    return DiffRational(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
}

Rational DiffRational::evaluate(const Assignment& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw EvalError("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

std::set<VarKey> DiffRational::variables() const {
    std::set<VarKey> out = num_.variables();
    auto dv = den_.variables();
    out.insert(dv.begin(), dv.end());
    return out;
}

std::optional<std::uint32_t> DiffRational::order_in(unsigned i) const {
    auto a = num_.order_in(i);
    auto b = den_.order_in(i);
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

std::uint32_t DiffRational::max_jet_order() const {
    return std::max(num_.max_jet_order(), den_.max_jet_order());
}

std::string DiffRational::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---- substitution ----------------------------------------------------------

namespace {

struct PowerTable {
    std::vector<DiffPolynomial> num_pow;
    std::vector<DiffPolynomial> den_pow;
};

} // namespace

DiffRational substitute(const DiffPolynomial& p, const std::map<VarKey, DiffRational>& sub) {
    // Highest exponent per substituted variable, to size the power tables and
    // the common denominator.
    std::map<VarKey, std::uint32_t> max_exp;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors)
            if (sub.count(v)) {
                auto [it, fresh] = max_exp.emplace(v, e);
                if (!fresh && e > it->second) it->second = e;
            }
    if (max_exp.empty()) return DiffRational(p);

    std::map<VarKey, PowerTable> tables;
    DiffPolynomial common(rat(1));
    for (const auto& [v, me] : max_exp) {
        const DiffRational& val = sub.at(v);
        PowerTable tab;
        tab.num_pow.push_back(DiffPolynomial(rat(1)));
        tab.den_pow.push_back(DiffPolynomial(rat(1)));
        for (std::uint32_t e = 1; e <= me; ++e) {
            tab.num_pow.push_back(tab.num_pow.back() * val.num());
            tab.den_pow.push_back(tab.den_pow.back() * val.den());
        }
        common = common * tab.den_pow[me];
        tables.emplace(v, std::move(tab));
    }

    DiffPolynomial result;
    for (const auto& [m, c] : p.terms()) {
        DiffPolynomial contrib(c);
        Monomial rest;
        for (const auto& [v, e] : m.factors) {
            auto it = tables.find(v);
            if (it == tables.end()) {
                rest = rest.times(Monomial::variable(v, e));
            } else {
                const auto me = max_exp.at(v);
                contrib = contrib * it->second.num_pow[e] * it->second.den_pow[me - e];
            }
        }
        // Denominator factors of variables absent from this term.
        for (const auto& [v, me] : max_exp)
            if (m.exponent_of(v) == 0) contrib = contrib * tables.at(v).den_pow[me];
        if (!rest.is_one()) contrib = contrib * DiffPolynomial::term(rat(1), rest);
        result = result + contrib;
    }
    return DiffRational(result, common);
}

DiffRational substitute(const DiffRational& f, const std::map<VarKey, DiffRational>& sub) {
    return substitute(f.num(), sub) / substitute(f.den(), sub);
}

DiffPolynomial substitute_poly(const DiffPolynomial& p,
                               const std::map<VarKey, DiffPolynomial>& sub) {
    std::map<VarKey, std::uint32_t> max_exp;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors)
            if (sub.count(v)) {
                auto [it, fresh] = max_exp.emplace(v, e);
                if (!fresh && e > it->second) it->second = e;
            }
    if (max_exp.empty()) return p;

    std::map<VarKey, std::vector<DiffPolynomial>> powers;
    for (const auto& [v, me] : max_exp) {
        std::vector<DiffPolynomial> tab;
        tab.push_back(DiffPolynomial(rat(1)));
        for (std::uint32_t e = 1; e <= me; ++e) tab.push_back(tab.back() * sub.at(v));
        powers.emplace(v, std::move(tab));
    }

    DiffPolynomial result;
    for (const auto& [m, c] : p.terms()) {
        DiffPolynomial contrib(c);
        Monomial rest;
        for (const auto& [v, e] : m.factors) {
            auto it = powers.find(v);
            if (it == powers.end()) {
                rest = rest.times(Monomial::variable(v, e));
            } else {
                contrib = contrib * it->second[e];
            }
        }
        if (!rest.is_one()) contrib = contrib * DiffPolynomial::term(rat(1), rest);
        result = result + contrib;
    }
    return result;
}

} // namespace diffinv
