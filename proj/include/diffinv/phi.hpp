#pragma once

#include "diffinv/polynomial.hpp"

namespace diffinv {

// Coefficient Phi_{k,i}{g} of delta^i in the expansion d^k = sum_i
// Phi_{k,i}{g} delta^i, delta = g^-1 d.  Computed combinatorially as
// sum_alpha C_alpha g^alpha1 (dg)^alpha2 ... (d^{k-1}g)^alphak over the
// compositions with |alpha| = i and sum_j j*alpha_j = k, where C_alpha =
// k! / (alpha1! ... alphak! * prod_j (j!)^alphaj).  Throws unless
// 1 <= i <= k.
DiffPolynomial phi_coefficient(unsigned k, unsigned i);

// Checks d^k x1 = sum_{i=1}^k Phi_{k,i}{g} delta^i x1 exactly, with the
// delta-jets computed by the independent g^-1 d recursion.
bool check_phi_expansion(unsigned k);

} // namespace diffinv
