#pragma once

#include <vector>

#include "diffinv/rational_function.hpp"
#include "diffinv/rng.hpp"

namespace diffinv::testing {

inline DiffPolynomial pvar(VarKey v, unsigned e = 1) { return DiffPolynomial::variable(v, e); }
inline DiffRational rvar(VarKey v, unsigned e = 1) { return DiffRational::variable(v, e); }
inline VarKey X(unsigned i, unsigned k = 0) { return VarKey::x(i, k); }

// Random sparse polynomial over jets of x_1..x_n (orders <= max_order) and,
// optionally, g-jets.
inline DiffPolynomial random_poly(Rng& rng, unsigned n, unsigned max_order,
                                  bool with_g = false, unsigned terms = 5) {
    std::vector<VarKey> pool;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned k = 0; k <= max_order; ++k) pool.push_back(VarKey::x(i, k));
    if (with_g)
        for (unsigned k = 0; k <= max_order; ++k) pool.push_back(VarKey::g(k));
    DiffPolynomial out;
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m;
        const unsigned nvars = static_cast<unsigned>(rng.int_in(0, 2));
        for (unsigned v = 0; v < nvars; ++v) {
            VarKey key = pool[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(pool.size()) - 1))];
            m = m.times(Monomial::variable(key, static_cast<unsigned>(rng.int_in(1, 2))));
        }
        out.add_term(m, rng.rational(9));
    }
    return out;
}

inline DiffPolynomial random_nonzero_poly(Rng& rng, unsigned n, unsigned max_order,
                                          bool with_g = false, unsigned terms = 5) {
    for (;;) {
        DiffPolynomial p = random_poly(rng, n, max_order, with_g, terms);
        if (!p.is_zero()) return p;
    }
}

inline DiffRational random_rational(Rng& rng, unsigned n, unsigned max_order,
                                    bool with_g = false) {
    return DiffRational(random_poly(rng, n, max_order, with_g),
                        random_nonzero_poly(rng, n, max_order, with_g, 3));
}

} // namespace diffinv::testing
