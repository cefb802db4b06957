#include "diffinv/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diffinv {

// ---- Monomial --------------------------------------------------------------

Monomial Monomial::variable(VarKey v, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) m.factors.push_back({v, exp});
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

std::uint32_t Monomial::exponent_of(VarKey v) const {
    for (const auto& [w, e] : factors)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors.reserve(factors.size() + other.factors.size());
    std::size_t i = 0, j = 0;
    while (i < factors.size() && j < other.factors.size()) {
        if (factors[i].first < other.factors[j].first) {
            out.factors.push_back(factors[i++]);
        } else if (other.factors[j].first < factors[i].first) {
            out.factors.push_back(other.factors[j++]);
        } else {
            out.factors.push_back({factors[i].first, factors[i].second + other.factors[j].second});
            ++i;
            ++j;
        }
    }
    for (; i < factors.size(); ++i) out.factors.push_back(factors[i]);
    for (; j < other.factors.size(); ++j) out.factors.push_back(other.factors[j]);
    return out;
}

Monomial Monomial::pow(std::uint32_t e) const {
    Monomial out;
    if (e == 0) return out;
    out.factors = factors;
    for (auto& [v, x] : out.factors) x *= e;
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (j < other.factors.size()) {
        if (i >= factors.size()) return std::nullopt;
        if (factors[i].first < other.factors[j].first) {
            out.factors.push_back(factors[i++]);
            continue;
        }
        if (other.factors[j].first < factors[i].first) return std::nullopt;
        if (factors[i].second < other.factors[j].second) return std::nullopt;
        if (factors[i].second > other.factors[j].second)
            out.factors.push_back({factors[i].first, factors[i].second - other.factors[j].second});
        ++i;
        ++j;
    }
    for (; i < factors.size(); ++i) out.factors.push_back(factors[i]);
    return out;
}

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    // Display order: derivative order first, then indeterminate.
    auto sorted = factors;
    std::sort(sorted.begin(), sorted.end(), [](const auto& p, const auto& q) {
        const VarKey &v = p.first, &w = q.first;
        if (v.order != w.order) return v.order < w.order;
        return v < w;
    });
    std::string out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += "*";
        out += sorted[i].first.display();
        if (sorted[i].second > 1) out += "^" + std::to_string(sorted[i].second);
    }
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const auto& [va, ea] = a.factors[i];
        const auto& [vb, eb] = b.factors[j];
        if (va < vb) return false; // a has a positive exp where b has 0: a greater
        if (vb < va) return true;  // b has a positive exp on an earlier var
        if (ea != eb) return ea < eb;
        ++i;
        ++j;
    }
    if (i < a.factors.size()) return false;
    if (j < b.factors.size()) return true;
    return false;
}

// ---- DiffPolynomial --------------------------------------------------------

DiffPolynomial::DiffPolynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial::one(), c);
}

DiffPolynomial DiffPolynomial::variable(VarKey v, std::uint32_t exp) {
    DiffPolynomial p;
    p.terms_.emplace(Monomial::variable(v, exp), Rational(1));
    return p;
}

DiffPolynomial DiffPolynomial::term(const Rational& c, const Monomial& m) {
    DiffPolynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool DiffPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_one();
}

bool DiffPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

Rational DiffPolynomial::constant_value() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPolynomial DiffPolynomial::operator-() const {
    DiffPolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

DiffPolynomial DiffPolynomial::operator+(const DiffPolynomial& o) const {
    DiffPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

DiffPolynomial DiffPolynomial::operator-(const DiffPolynomial& o) const {
    DiffPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

DiffPolynomial DiffPolynomial::operator*(const DiffPolynomial& o) const {
    DiffPolynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

DiffPolynomial DiffPolynomial::operator*(const Rational& c) const {
    if (c == 0) return DiffPolynomial();
    DiffPolynomial out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

DiffPolynomial DiffPolynomial::pow(std::uint32_t e) const {
    DiffPolynomial out(rat(1));
    for (std::uint32_t i = 0; i < e; ++i) out = out * *this;
    return out;
}

DiffPolynomial DiffPolynomial::derive() const {
    DiffPolynomial out;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            const auto [v, e] = m.factors[i];
            Monomial dm;
            dm.factors.reserve(m.factors.size() + 1);
            for (std::size_t j = 0; j < m.factors.size(); ++j) {
                if (j == i) {
                    if (e > 1) dm.factors.push_back({v, e - 1});
                } else {
                    dm.factors.push_back(m.factors[j]);
                }
            }
            out.add_term(dm.times(Monomial::variable(v.derived())), c * e);
        }
    }
    return out;
}

Rational DiffPolynomial::evaluate(const Assignment& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.factors) {
            auto it = point.find(var);
            if (it == point.end())
                throw EvalError("unassigned variable " + var.display());
            v *= rat_pow(it->second, e);
        }
        total += v;
    }
    return total;
}

std::set<VarKey> DiffPolynomial::variables() const {
    std::set<VarKey> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors) out.insert(v);
    return out;
}

std::optional<std::uint32_t> DiffPolynomial::order_in(unsigned i) const {
    std::optional<std::uint32_t> best;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors)
            if (v.kind == Kind::X && v.a == i)
                if (!best || v.order > *best) best = v.order;
    return best;
}

std::uint32_t DiffPolynomial::max_jet_order() const {
    std::uint32_t best = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors) best = std::max(best, v.order);
    return best;
}

unsigned DiffPolynomial::total_degree() const {
    unsigned best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
    return best;
}

const std::pair<const Monomial, Rational>& DiffPolynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

std::string DiffPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            out << rat_str(a);
        } else if (a == 1) {
            out << m.str();
        } else {
            out << rat_str(a) << "*" << m.str();
        }
    }
    return out.str();
}

// ---- exact division --------------------------------------------------------

namespace {
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};
} // namespace

std::optional<DiffPolynomial> try_divide_exact(const DiffPolynomial& num,
                                               const DiffPolynomial& div) {
    if (div.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    std::map<Monomial, Rational, GrlexLess> rem(num.terms().begin(), num.terms().end());
    auto dlead = std::max_element(
        div.terms().begin(), div.terms().end(),
        [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
    DiffPolynomial quot;
    while (!rem.empty()) {
        const auto& [rm, rc] = *rem.rbegin();
        auto qm = rm.divide(dlead->first);
        if (!qm) return std::nullopt;
        Rational qc = rc / dlead->second;
        quot.add_term(*qm, qc);
        for (const auto& [dm, dc] : div.terms()) {
            Monomial target = qm->times(dm);
            auto [it, fresh] = rem.emplace(target, Rational(0));
            it->second -= qc * dc;
            if (it->second == 0) rem.erase(it);
        }
    }
    return quot;
}

} // namespace diffinv
