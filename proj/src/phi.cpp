#include "diffinv/phi.hpp"

#include <stdexcept>

#include "diffinv/derivation.hpp"

namespace diffinv {

namespace {

// All alpha = (alpha_1..alpha_k) >= 0 with sum alpha_j = i and
// sum j*alpha_j = k.
void enumerate_compositions(unsigned k, unsigned i, unsigned j, unsigned parts_left,
                            unsigned weight_left, std::vector<unsigned>& alpha,
                            std::vector<std::vector<unsigned>>& out) {
    if (j > k) {
        if (parts_left == 0 && weight_left == 0) out.push_back(alpha);
        return;
    }
    for (unsigned a = 0; a <= parts_left && a * j <= weight_left; ++a) {
        alpha[j - 1] = a;
        enumerate_compositions(k, i, j + 1, parts_left - a, weight_left - a * j, alpha, out);
    }
    alpha[j - 1] = 0;
}

} // namespace

DiffPolynomial phi_coefficient(unsigned k, unsigned i) {
    if (i < 1 || i > k) throw std::invalid_argument("phi_coefficient requires 1 <= i <= k");
    std::vector<std::vector<unsigned>> compositions;
    std::vector<unsigned> alpha(k, 0);
    enumerate_compositions(k, i, 1, i, k, alpha, compositions);

    DiffPolynomial out;
    const Integer kfact = factorial(k);
    for (const auto& comp : compositions) {
        Integer denom(1);
        Monomial mono;
        for (unsigned j = 1; j <= k; ++j) {
            const unsigned aj = comp[j - 1];
            if (aj == 0) continue;
            denom *= factorial(aj);
            Integer jf = factorial(j);
            for (unsigned q = 0; q < aj; ++q) denom *= jf;
            mono = mono.times(Monomial::variable(VarKey::g(j - 1), aj));
        }
        Rational c(kfact, denom);
        c.canonicalize();
        out.add_term(mono, c);
    }
    return out;
}

bool check_phi_expansion(unsigned k) {
    if (k < 1) throw std::invalid_argument("check_phi_expansion requires k >= 1");
    DeltaJetTable table(DerivationSpec::g_reparam());
    DiffRational lhs = DiffRational::variable(VarKey::x(1, k));
    DiffRational rhs;
    for (unsigned i = 1; i <= k; ++i)
        rhs = rhs + DiffRational(phi_coefficient(k, i)) * table.jet(VarKey::x(1, i));
    return lhs == rhs;
}

} // namespace diffinv
