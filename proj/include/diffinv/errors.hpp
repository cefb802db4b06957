#pragma once

#include <stdexcept>
#include <string>

namespace diffinv {

// Evaluation hit a pole, a vanishing denominator or an unassigned variable.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// The construction is undefined at the given point or curve (W, p1 or p
// vanishes there).  Callers either report this or redraw the point.
class DegeneracyError : public EvalError {
public:
    explicit DegeneracyError(const std::string& what) : EvalError(what) {}
};

// Truncated-series arithmetic ran out of tracked orders.  Seeing this means
// an engine was started with too short a series, not bad input.
class PrecisionError : public std::logic_error {
public:
    explicit PrecisionError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace diffinv
