#pragma once

#include <cstdint>

#include "diffinv/rational.hpp"

namespace diffinv {

// splitmix64 stream; identical output on every platform and compiler, so
// seeded reports are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    long int_in(long lo, long hi); // inclusive bounds
    bool coin();

    // Numerator in [-range, range], denominator in [1, range].
    Rational rational(long range);
    Rational nonzero_rational(long range);

private:
    std::uint64_t state_;
};

// Decorrelated sub-seed for trial `index` of a campaign seeded with `seed`.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

} // namespace diffinv
