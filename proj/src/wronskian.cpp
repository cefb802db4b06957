#include "diffinv/wronskian.hpp"

#include <stdexcept>

#include "diffinv/phi.hpp"

namespace diffinv {

namespace {

DiffPolynomial det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    DiffPolynomial total;
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        PolyMatrix sub;
        sub.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<DiffPolynomial> row(m[i].begin() + 1, m[i].end());
            sub.push_back(std::move(row));
        }
        DiffPolynomial contrib = m[r][0] * det_cofactor(sub);
        total = (r % 2 == 0) ? total + contrib : total - contrib;
    }
    return total;
}

// Fraction-free elimination; every division is exact in the polynomial ring.
DiffPolynomial det_bareiss(PolyMatrix m) {
    const std::size_t n = m.size();
    DiffPolynomial prev(rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return DiffPolynomial();
            std::swap(m[swap_row], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                DiffPolynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = try_divide_exact(num, prev);
                if (!q) throw std::logic_error("non-exact division in Bareiss elimination");
                m[i][j] = std::move(*q);
            }
            m[i][k] = DiffPolynomial();
        }
        prev = m[k][k];
    }
    DiffPolynomial result = m[n - 1][n - 1];
    return sign == 1 ? result : -result;
}

void require_square(std::size_t rows, std::size_t cols) {
    if (rows == 0 || rows != cols) throw std::invalid_argument("determinant of a non-square matrix");
}

} // namespace

DiffPolynomial det(const PolyMatrix& m) {
    require_square(m.size(), m.empty() ? 0 : m[0].size());
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("ragged matrix");
    if (m.size() <= 4) return det_cofactor(m);
    return det_bareiss(m);
}

DiffRational det(const RationalMatrix& m) {
    require_square(m.size(), m.empty() ? 0 : m[0].size());
    const std::size_t n = m.size();
    // Clear each row to polynomials: scale row i by the product of its
    // denominators, then divide the polynomial determinant back out.
    PolyMatrix cleared(n);
    DiffPolynomial scale(rat(1));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("ragged matrix");
        // prefix/suffix products of denominators avoid any division
        std::vector<DiffPolynomial> prefix(n + 1, DiffPolynomial(rat(1)));
        std::vector<DiffPolynomial> suffix(n + 1, DiffPolynomial(rat(1)));
        for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * m[i][j].den();
        for (std::size_t j = n; j-- > 0;) suffix[j] = suffix[j + 1] * m[i][j].den();
        cleared[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            cleared[i].push_back(m[i][j].num() * (prefix[j] * suffix[j + 1]));
        scale = scale * prefix[n];
    }
    return DiffRational(det(cleared), scale);
}

namespace {

// Column of d^order x, rows x_1..x_n.
std::vector<DiffPolynomial> jet_column(unsigned n, unsigned order) {
    std::vector<DiffPolynomial> col;
    col.reserve(n);
    for (unsigned r = 1; r <= n; ++r) col.push_back(DiffPolynomial::variable(VarKey::x(r, order)));
    return col;
}

PolyMatrix from_columns(const std::vector<std::vector<DiffPolynomial>>& cols) {
    const std::size_t n = cols[0].size();
    PolyMatrix m(n, std::vector<DiffPolynomial>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
    return m;
}

} // namespace

DiffPolynomial wronskian(unsigned n) {
    if (n < 1) throw std::invalid_argument("wronskian requires n >= 1");
    std::vector<std::vector<DiffPolynomial>> cols;
    for (unsigned o = 1; o <= n; ++o) cols.push_back(jet_column(n, o));
    return det(from_columns(cols));
}

DiffPolynomial wronskian_minor(unsigned n, unsigned i) {
    if (i < 1 || i > n + 1) throw std::invalid_argument("minor index out of range");
    std::vector<std::vector<DiffPolynomial>> cols;
    for (unsigned o = 1; o <= n + 1; ++o) {
        if (o == i) continue;
        cols.push_back(jet_column(n, o));
    }
    return det(from_columns(cols));
}

DiffPolynomial wronskian_with_row(unsigned n, VarKey extra) {
    PolyMatrix m(n + 1, std::vector<DiffPolynomial>(n + 1));
    for (unsigned j = 0; j <= n; ++j) {
        const unsigned order = j + 1;
        for (unsigned r = 1; r <= n; ++r)
            m[r - 1][j] = DiffPolynomial::variable(VarKey::x(r, order));
        m[n][j] = DiffPolynomial::variable(extra.derived(order));
    }
    return det(m);
}

DiffRational alternating_minor_sum(unsigned n, VarKey yvar) {
    DiffRational total;
    for (unsigned i = 1; i <= n + 1; ++i) {
        DiffRational term = DiffRational(wronskian_minor(n, i)) *
                            DiffRational::variable(yvar.derived(i));
        total = ((n + 1 - i) % 2 == 0) ? total + term : total - term;
    }
    return total;
}

DiffRational predicted_minor_transform(unsigned n, unsigned j) {
    if (j < 1 || j > n + 1) throw std::invalid_argument("minor index out of range");
    DiffPolynomial sum;
    for (unsigned i = j; i <= n + 1; ++i) {
        DiffPolynomial term = phi_coefficient(i, j) * wronskian_minor(n, i);
        sum = ((i - j) % 2 == 0) ? sum + term : sum - term;
    }
    const unsigned power = (n + 1) * (n + 2) / 2;
    return DiffRational(sum, DiffPolynomial::variable(VarKey::g(), power));
}

namespace {

DiffRational g_ratio(unsigned num_order, unsigned den_power) {
    return DiffRational(DiffPolynomial::variable(VarKey::g(num_order)),
                        DiffPolynomial::variable(VarKey::g(), den_power));
}

} // namespace

IdentityPair minor_law_pair(unsigned n, unsigned j) {
    return {"minor-law j=" + std::to_string(j) + " n=" + std::to_string(n),
            reinterpret(wronskian_minor(n, j), DerivationSpec::g_reparam()),
            predicted_minor_transform(n, j)};
}

IdentityPair eq2_pair(unsigned n) {
    const auto g_spec = DerivationSpec::g_reparam();
    DiffRational lhs = reinterpret(wronskian_minor(n, n), g_spec) /
                       reinterpret(wronskian(n), g_spec);
    DiffRational wn = DiffRational(wronskian_minor(n, n)) / DiffRational(wronskian(n));
    DiffRational dg_over_g = g_ratio(1, 1);
    DiffRational ginv = DiffRational::variable(VarKey::g()).reciprocal();
    long nn = n;
    DiffRational rhs = ginv * (wn - dg_over_g * rat(nn * (nn + 1), 2));
    return {"eq2 n=" + std::to_string(n), lhs, rhs};
}

IdentityPair eq3_pair(unsigned n) {
    if (n < 2) throw std::invalid_argument("eq3 requires n >= 2");
    const auto g_spec = DerivationSpec::g_reparam();
    DiffRational lhs = reinterpret(wronskian_minor(n, n - 1), g_spec) /
                       reinterpret(wronskian(n), g_spec);
    DiffRational w(wronskian(n));
    DiffRational rn1 = DiffRational(wronskian_minor(n, n - 1)) / w;
    DiffRational rn = DiffRational(wronskian_minor(n, n)) / w;
    DiffRational u = g_ratio(1, 1); // dg/g
    DiffRational du = u.derive();
    long nn = n;
    DiffRational bracket = rn1 - rn * u * rat(nn * (nn - 1), 2) +
                           du * rat((nn - 1) * nn * (nn + 1), 6) +
                           u * u * rat((nn - 1) * nn * (nn + 1) * (3 * nn - 2), 24);
    DiffRational g2 = DiffRational::variable(VarKey::g(), 2).reciprocal();
    return {"eq3 n=" + std::to_string(n), lhs, g2 * bracket};
}

IdentityPair eq4_pair(unsigned n) {
    const auto g_spec = DerivationSpec::g_reparam();
    DiffRational ratio = reinterpret(wronskian_minor(n, n), g_spec) /
                         reinterpret(wronskian(n), g_spec);
    DiffRational lhs = ratio * ratio;
    DiffRational w(wronskian(n));
    DiffRational rn = DiffRational(wronskian_minor(n, n)) / w;
    DiffRational u = g_ratio(1, 1);
    long nn = n;
    DiffRational inner = rn * u - u * u * rat(nn * (nn + 1), 4);
    DiffRational g2 = DiffRational::variable(VarKey::g(), 2).reciprocal();
    DiffRational rhs = g2 * (rn * rn - inner * rat(nn * (nn + 1), 1));
    return {"eq4 n=" + std::to_string(n), lhs, rhs};
}

IdentityPair delta_log_pair(unsigned n) {
    const auto g_spec = DerivationSpec::g_reparam();
    DiffRational ratio = reinterpret(wronskian_minor(n, n), g_spec) /
                         reinterpret(wronskian(n), g_spec);
    DiffRational lhs = delta_apply(ratio, g_spec);
    DiffRational w(wronskian(n));
    DiffRational rn = DiffRational(wronskian_minor(n, n)) / w;
    DiffRational u = g_ratio(1, 1);        // dg/g
    DiffRational v = g_ratio(2, 1);        // d2g/g
    long nn = n;
    DiffRational rhs = (rn.derive() - rn * u - v * rat(nn * (nn + 1), 2) +
                        u * u * rat(nn * (nn + 1), 1)) *
                       DiffRational::variable(VarKey::g(), 2).reciprocal();
    return {"delta-log n=" + std::to_string(n), lhs, rhs};
}

} // namespace diffinv
