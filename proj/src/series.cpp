#include "diffinv/series.hpp"

#include <algorithm>

namespace diffinv {

Series Series::constant(const Rational& v, unsigned prec) {
    std::vector<Rational> c(prec, Rational(0));
    if (prec > 0) c[0] = v;
    return Series(std::move(c));
}

Series Series::from_jets(const std::vector<Rational>& jets) {
    std::vector<Rational> c(jets.size());
    Rational fact(1);
    for (std::size_t k = 0; k < jets.size(); ++k) {
        if (k > 0) fact *= static_cast<long>(k);
        c[k] = jets[k] / fact;
    }
    return Series(std::move(c));
}

const Rational& Series::at(unsigned i) const {
    if (i >= c_.size()) throw PrecisionError("series precision exhausted");
    return c_[i];
}

bool Series::is_zero() const {
    if (c_.empty()) throw PrecisionError("series precision exhausted");
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
}

Series Series::operator+(const Series& o) const {
    const unsigned prec = std::min(precision(), o.precision());
    std::vector<Rational> c(prec);
    for (unsigned i = 0; i < prec; ++i) c[i] = c_[i] + o.c_[i];
    return Series(std::move(c));
}

Series Series::operator-(const Series& o) const {
    const unsigned prec = std::min(precision(), o.precision());
    std::vector<Rational> c(prec);
    for (unsigned i = 0; i < prec; ++i) c[i] = c_[i] - o.c_[i];
    return Series(std::move(c));
}

Series Series::operator*(const Series& o) const {
    const unsigned prec = std::min(precision(), o.precision());
    std::vector<Rational> c(prec, Rational(0));
    for (unsigned i = 0; i < prec; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; i + j < prec; ++j) {
            if (o.c_[j] == 0) continue;
            c[i + j] += c_[i] * o.c_[j];
        }
    }
    return Series(std::move(c));
}

Series Series::operator*(const Rational& k) const {
    Series out = *this;
    for (auto& q : out.c_) q *= k;
    return out;
}

Series Series::inverse() const {
    const unsigned prec = precision();
    if (prec == 0) throw PrecisionError("series precision exhausted");
    if (c_[0] == 0) throw DegeneracyError("inverting a series with vanishing constant term");
    std::vector<Rational> inv(prec, Rational(0));
    inv[0] = Rational(1) / c_[0];
    for (unsigned k = 1; k < prec; ++k) {
        Rational acc(0);
        for (unsigned j = 1; j <= k; ++j) acc += c_[j] * inv[k - j];
        inv[k] = -acc / c_[0];
    }
    return Series(std::move(inv));
}

Series Series::pow(unsigned e) const {
    Series out = Series::constant(Rational(1), precision());
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

Series ddt(const Series& s) {
    const unsigned prec = s.precision();
    if (prec == 0) throw PrecisionError("series precision exhausted");
    std::vector<Rational> c(prec - 1);
    for (unsigned i = 0; i + 1 < prec; ++i) c[i] = s.at(i + 1) * static_cast<long>(i + 1);
    return Series(std::move(c));
}

Series random_series(Rng& rng, unsigned prec, long range, bool nonzero_constant) {
    std::vector<Rational> c(prec);
    for (unsigned i = 0; i < prec; ++i)
        c[i] = (i == 0 && nonzero_constant) ? rng.nonzero_rational(range) : rng.rational(range);
    return Series(std::move(c));
}

} // namespace diffinv
