#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffinv/eval.hpp"
#include "diffinv/groups.hpp"
#include "diffinv/rational_function.hpp"

namespace diffinv {

// Surface AST for the expression language.  Scalar expressions over exact
// rationals, the jet variables, + - * / ^ with nonnegative integer
// exponents, the derivation node D(e) / D(e,k), and the dot(a,b) shorthand
// over the vector atoms x and z1..z{n+1}.
struct Expr {
    enum class Kind { Number, Var, VecX, VecZ, Neg, Add, Sub, Mul, Div, Pow, Derive, Dot };

    Kind kind = Kind::Number;
    Rational number;       // Number
    VarKey var;            // Var
    unsigned block = 0;    // VecZ
    unsigned exponent = 0; // Pow
    unsigned dorder = 1;   // Derive
    std::vector<Expr> args;

    static Expr num(const Rational& q);
    static Expr variable(VarKey v);
};

struct ParseOptions {
    // 0 means "any index"; otherwise x/z coordinate indices are bounded.
    unsigned max_x = 0;
    bool allow_vectors = true;
};

Expr parse(const std::string& text, const ParseOptions& opts = {});

// Canonical printer: commutative chains are flattened and sorted (numbers
// first, then jet variables by (derivative order, indeterminate), then
// composite factors).  parse(print(e)) prints back to the same string.
std::string print(const Expr& e);

// Lowering to the algebra.  Vector subtrees may appear only under dot();
// `n` is required to expand them (0 = infer nothing, reject vectors).
DiffRational lower(const Expr& e, unsigned n = 0);

// One coordinate of a curve file: a rational function of t alone.
UniRational lower_curve_coordinate(const Expr& e);

CurveSpec parse_curve_file(const std::string& path);
CurveSpec parse_curve_text(const std::string& text);

// Group catalog files: "key: value" lines with keys name, n, phi (repeated),
// p, pbar, pbar-binding.  File-loaded groups carry no element sampler.
GroupSpec parse_group_file(const std::string& path);
GroupSpec parse_group_text(const std::string& text);

} // namespace diffinv
