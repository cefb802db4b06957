#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace diffinv {

// Families of indeterminates available in a session: the coordinates x_i,
// the reparametrization symbol g, the scratch indeterminates y and s, the
// indexed family t_i (t_0 is the plain parameter t) and the block variables
// z_{i,b} used by algebraic group invariants.
enum class Kind : std::uint8_t { X = 0, G = 1, Y = 2, S = 3, T = 4, Z = 5 };

// One jet variable: the indeterminate (kind, a, b) differentiated `order`
// times.  Keys are totally ordered by (indeterminate, order); this order is
// what "leading" means everywhere in the library.
struct VarKey {
    Kind kind = Kind::X;
    std::uint16_t a = 0; // coordinate index for X and Z, family index for T
    std::uint16_t b = 0; // block index for Z
    std::uint32_t order = 0;

    friend auto operator<=>(const VarKey&, const VarKey&) = default;

    VarKey base() const { return {kind, a, b, 0}; }
    VarKey derived(std::uint32_t times = 1) const { return {kind, a, b, order + times}; }

    static VarKey x(unsigned i, unsigned k = 0);
    static VarKey g(unsigned k = 0) { return {Kind::G, 0, 0, k}; }
    static VarKey y(unsigned k = 0) { return {Kind::Y, 0, 0, k}; }
    static VarKey s(unsigned k = 0) { return {Kind::S, 0, 0, k}; }
    static VarKey t(unsigned i = 0, unsigned k = 0);
    static VarKey z(unsigned i, unsigned block, unsigned k = 0);

    std::string name() const;    // x1, g, s, t, t3, z1_2
    std::string display() const; // x1, D(x1), D(x1,2), ...
};

} // namespace diffinv
