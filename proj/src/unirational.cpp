#include "diffinv/unirational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diffinv {

// ---- UniPoly ----------------------------------------------------------------

UniPoly::UniPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rational& k) const {
    if (k == 0) return UniPoly();
    UniPoly out = *this;
    for (auto& c : out.c_) c *= k;
    return out;
}

UniPoly UniPoly::derive() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(out));
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    UniPoly rem = *this;
    std::vector<Rational> q(rem.c_.size() > d.c_.size() ? rem.c_.size() - d.c_.size() + 1 : 1,
                            Rational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
        Rational f = rem.leading() / d.leading();
        q[shift] += f;
        std::vector<Rational> sub(shift, Rational(0));
        sub.insert(sub.end(), d.c_.begin(), d.c_.end());
        UniPoly s(std::move(sub));
        rem = rem - s * f;
    }
    if (!rem.is_zero()) throw std::logic_error("non-exact univariate division");
    return UniPoly(std::move(q));
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = abs(c_[i]);
        if (first) {
            if (c_[i] < 0) out << "-";
            first = false;
        } else {
            out << (c_[i] < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << rat_str(a);
        } else {
            if (a != 1) out << rat_str(a) << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---- gcd (primitive PRS over Z) ---------------------------------------------

namespace {

std::vector<Integer> to_primitive_z(const UniPoly& p) {
    // Clear denominators, strip content, force positive leading coefficient.
    Integer lcm(1);
    for (const auto& c : p.coeffs()) {
        Integer den = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer content(0);
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (content != 0)
        for (auto& v : out) v /= content;
    if (!out.empty() && out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

void strip_z(std::vector<Integer>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    Integer content(0);
    for (const auto& v : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
        for (auto& v : p) v /= content;
    if (!p.empty() && p.back() < 0)
        for (auto& v : p) v = -v;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
std::vector<Integer> prem_z(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t da = a.size() - 1;
        Integer lead_a = a.back();
        const Integer& lead_b = b.back();
        // a := lead_b * a - lead_a * t^(da-db) * b
        for (auto& v : a) v *= lead_b;
        for (std::size_t i = 0; i <= db; ++i) a[da - db + i] -= lead_a * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

} // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly();
    if (a.is_zero() || b.is_zero()) {
        const UniPoly& nz = a.is_zero() ? b : a;
        return nz * (Rational(1) / nz.leading());
    }
    std::vector<Integer> u = to_primitive_z(a);
    std::vector<Integer> v = to_primitive_z(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Integer> r = prem_z(u, v);
        strip_z(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(u.size());
    for (const auto& c : u) out.emplace_back(c);
    UniPoly monic(std::move(out));
    return monic * (Rational(1) / monic.leading());
}

// ---- UniRational --------------------------------------------------------------

UniRational::UniRational(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    reduce();
}

void UniRational::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

UniRational UniRational::operator-() const {
    UniRational out = *this;
    out.num_ = -out.num_;
    return out;
}

UniRational UniRational::operator+(const UniRational& o) const {
    return UniRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

UniRational UniRational::operator-(const UniRational& o) const {
    return UniRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

UniRational UniRational::operator*(const UniRational& o) const {
    return UniRational(num_ * o.num_, den_ * o.den_);
}

UniRational UniRational::operator*(const Rational& c) const {
    return UniRational(num_ * c, den_);
}

UniRational UniRational::operator/(const UniRational& o) const {
    if (o.is_zero()) throw DegeneracyError("division by an identically zero function");
    return UniRational(num_ * o.den_, den_ * o.num_);
}

bool UniRational::operator==(const UniRational& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

UniRational UniRational::derive() const {
    return UniRational(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
}

Rational UniRational::evaluate(const Rational& t) const {
    Rational d = den_.evaluate(t);
    if (d == 0) throw EvalError("pole at t = " + rat_str(t));
    return num_.evaluate(t) / d;
}

std::string UniRational::str() const {
    if (den_ == UniPoly(Rational(1))) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

UniRational compose(const UniRational& f, const UniRational& g) {
    // Horner in g for numerator and denominator separately.
    auto horner = [&g](const UniPoly& p) {
        UniRational acc(Rational(0));
        for (std::size_t i = p.coeffs().size(); i-- > 0;)
            acc = acc * g + UniRational(p.coeffs()[i]);
        return acc;
    };
    UniRational num = horner(f.num());
    UniRational den = horner(f.den());
    return num / den;
}

std::vector<Rational> jets_at(const UniRational& f, const Rational& t0, unsigned max_order) {
    std::vector<Rational> out;
    out.reserve(max_order + 1);
    UniRational cur = f;
    out.push_back(cur.evaluate(t0));
    for (unsigned k = 1; k <= max_order; ++k) {
        cur = cur.derive();
        out.push_back(cur.evaluate(t0));
    }
    return out;
}

} // namespace diffinv
