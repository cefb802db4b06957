#include "diffinv/rng.hpp"

namespace diffinv {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

std::uint64_t Rng::next() { return splitmix64(state_); }

long Rng::int_in(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
}

bool Rng::coin() { return (next() & 1u) != 0; }

Rational Rng::rational(long range) {
    return rat(int_in(-range, range), int_in(1, range));
}

Rational Rng::nonzero_rational(long range) {
    for (;;) {
        Rational q = rational(range);
        if (q != 0) return q;
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(state);
}

} // namespace diffinv
