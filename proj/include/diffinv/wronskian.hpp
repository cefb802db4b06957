#pragma once

#include <string>
#include <vector>

#include "diffinv/derivation.hpp"
#include "diffinv/rational_function.hpp"

namespace diffinv {

using PolyMatrix = std::vector<std::vector<DiffPolynomial>>;
using RationalMatrix = std::vector<std::vector<DiffRational>>;

// Exact determinant: cofactor expansion up to 4x4, fraction-free Bareiss
// elimination above that.
DiffPolynomial det(const PolyMatrix& m);
DiffRational det(const RationalMatrix& m);

// W = det[dx, d^2x, ..., d^nx]; columns ordered by derivative order, row r
// carries coordinate x_r.
DiffPolynomial wronskian(unsigned n);

// W_i: delete column d^i x from [dx, ..., d^{n+1}x]; W_{n+1} = W.
DiffPolynomial wronskian_minor(unsigned n, unsigned i);

// det of the (n+1)x(n+1) jet matrix with rows x_1..x_n and `extra`, columns
// d..d^{n+1}.  Expanding along the last row gives the alternating minor sum.
DiffPolynomial wronskian_with_row(unsigned n, VarKey extra);

// sum_{i=1}^{n+1} (-1)^{n+1-i} W_i d^i y for the indeterminate `yvar`.
DiffRational alternating_minor_sum(unsigned n, VarKey yvar);

// The transformed minor W^delta_j written in x- and g-jets:
// g^{-(n+1)(n+2)/2} sum_{i=j}^{n+1} (-1)^{i-j} Phi_{i,j}{g} W_i.
DiffRational predicted_minor_transform(unsigned n, unsigned j);

struct IdentityPair {
    std::string name;
    DiffRational lhs;
    DiffRational rhs;
};

// Reinterpreted minor against the Phi-predicted transform.
IdentityPair minor_law_pair(unsigned n, unsigned j);

// W^delta_n / W^delta = g^-1 (W_n/W - n(n+1)/2 dg/g).
IdentityPair eq2_pair(unsigned n);

// The W^delta_{n-1}/W^delta law.
IdentityPair eq3_pair(unsigned n);

// The squared form of eq2.
IdentityPair eq4_pair(unsigned n);

// delta(W^delta_n / W^delta) written in d-quantities.
IdentityPair delta_log_pair(unsigned n);

} // namespace diffinv
