#include "diffinv/affine.hpp"

#include <stdexcept>

namespace diffinv {

namespace {

Rational matrix_det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

} // namespace

AffineMap::AffineMap(std::vector<std::vector<Rational>> h, std::vector<Rational> h0)
    : h_(std::move(h)), h0_(std::move(h0)) {
    const std::size_t n = h_.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : h_)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    if (h0_.empty()) h0_.assign(n, Rational(0));
    if (h0_.size() != n) throw std::invalid_argument("translation size mismatch");
    if (det() == 0) throw std::invalid_argument("singular matrix");
}

AffineMap AffineMap::identity(unsigned n) {
    std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n, Rational(0)));
    for (unsigned i = 0; i < n; ++i) h[i][i] = 1;
    return AffineMap(std::move(h), std::vector<Rational>(n, Rational(0)));
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    if (dim() != inner.dim()) throw std::invalid_argument("dimension mismatch");
    const unsigned n = dim();
    std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> h0(n, Rational(0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) h[i][j] += h_[i][k] * inner.h_[k][j];
        for (unsigned k = 0; k < n; ++k) h0[i] += h_[i][k] * inner.h0_[k];
        h0[i] += h0_[i];
    }
    return AffineMap(std::move(h), std::move(h0));
}

AffineMap AffineMap::inverse() const {
    const unsigned n = dim();
    // Gauss-Jordan on [h | I].
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug[i][j] = h_[i][j];
        aug[i][n + i] = 1;
    }
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && aug[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular matrix in inverse");
        std::swap(aug[pivot], aug[col]);
        Rational inv = Rational(1) / aug[col][col];
        for (unsigned j = 0; j < 2 * n; ++j) aug[col][j] *= inv;
        for (unsigned row = 0; row < n; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rational f = aug[row][col];
            for (unsigned j = 0; j < 2 * n; ++j) aug[row][j] -= f * aug[col][j];
        }
    }
    std::vector<std::vector<Rational>> hinv(n, std::vector<Rational>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) hinv[i][j] = aug[i][n + j];
    // (h, h0)^-1 = (h^-1, -h^-1 h0)
    std::vector<Rational> h0inv(n, Rational(0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) h0inv[i] -= hinv[i][j] * h0_[j];
    }
    return AffineMap(std::move(hinv), std::move(h0inv));
}

Rational AffineMap::det() const { return matrix_det(h_); }

bool AffineMap::is_orthogonal() const {
    const unsigned n = dim();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Rational dot(0);
            for (unsigned k = 0; k < n; ++k) dot += h_[k][i] * h_[k][j];
            if (dot != (i == j ? 1 : 0)) return false;
        }
    return true;
}

namespace {

template <Kind K>
std::map<VarKey, DiffPolynomial> action_substitution(const std::set<VarKey>& vars,
                                                     const AffineMap& m) {
    const unsigned n = m.dim();
    std::map<VarKey, DiffPolynomial> sub;
    for (const VarKey& v : vars) {
        if (v.kind != K) continue;
        if (v.a == 0 || v.a > n)
            throw std::invalid_argument("dimension mismatch: variable " + v.name() +
                                        " outside the map's dimension");
        DiffPolynomial image;
        for (unsigned j = 1; j <= n; ++j) {
            VarKey w = v;
            w.a = static_cast<std::uint16_t>(j);
            image = image + DiffPolynomial::variable(w) * m.h()[v.a - 1][j - 1];
        }
        // Translations survive only at derivative order zero (block 1 for z).
        const bool translated = (K == Kind::X) ? (v.order == 0) : (v.order == 0 && v.b == 1);
        if (translated) image = image + DiffPolynomial(m.h0()[v.a - 1]);
        sub.emplace(v, std::move(image));
    }
    return sub;
}

} // namespace

DiffPolynomial act_affine(const DiffPolynomial& f, const AffineMap& m) {
    return substitute_poly(f, action_substitution<Kind::X>(f.variables(), m));
}

DiffRational act_affine(const DiffRational& f, const AffineMap& m) {
    auto vars = f.variables();
    auto sub = action_substitution<Kind::X>(vars, m);
    return DiffRational(substitute_poly(f.num(), sub), substitute_poly(f.den(), sub));
}

DiffRational act_on_blocks(const DiffRational& f, const AffineMap& m) {
    auto vars = f.variables();
    auto sub = action_substitution<Kind::Z>(vars, m);
    return DiffRational(substitute_poly(f.num(), sub), substitute_poly(f.den(), sub));
}

} // namespace diffinv
