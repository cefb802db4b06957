#include "diffinv/varkey.hpp"

#include <stdexcept>

namespace diffinv {

VarKey VarKey::x(unsigned i, unsigned k) {
    if (i == 0) throw std::invalid_argument("coordinate indices are 1-based");
    return {Kind::X, static_cast<std::uint16_t>(i), 0, k};
}

VarKey VarKey::t(unsigned i, unsigned k) {
    return {Kind::T, static_cast<std::uint16_t>(i), 0, k};
}

VarKey VarKey::z(unsigned i, unsigned block, unsigned k) {
    if (i == 0 || block == 0) throw std::invalid_argument("block indices are 1-based");
    return {Kind::Z, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(block), k};
}

std::string VarKey::name() const {
    switch (kind) {
    case Kind::X: return "x" + std::to_string(a);
    case Kind::G: return "g";
    case Kind::Y: return "y";
    case Kind::S: return "s";
    case Kind::T: return a == 0 ? "t" : "t" + std::to_string(a);
    case Kind::Z: return "z" + std::to_string(a) + "_" + std::to_string(b);
    }
    return "?";
}

std::string VarKey::display() const {
    if (order == 0) return name();
    if (order == 1) return "D(" + name() + ")";
    return "D(" + name() + "," + std::to_string(order) + ")";
}

} // namespace diffinv
