#include "diffinv/rational.hpp"

#include <stdexcept>

namespace diffinv {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    bool invert = exp < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    if (invert && base == 0) throw std::invalid_argument("zero to a negative power");
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational out;
    if (invert) {
        out = Rational(den, num);
    } else {
        out = Rational(num, den);
    }
    out.canonicalize();
    return out;
}

Integer factorial(unsigned k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

} // namespace diffinv
