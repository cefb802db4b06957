#pragma once

#include <gmpxx.h>

#include <string>

namespace diffinv {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonicalized fraction num/den.
Rational rat(long num, long den = 1);

// Accepts "p", "-p", "p/q".
Rational rat_from_string(const std::string& text);

std::string rat_str(const Rational& q);

// exp may be negative; zero base with negative exp throws.
Rational rat_pow(const Rational& base, long exp);

Integer factorial(unsigned k);

} // namespace diffinv
