#pragma once

#include <vector>

#include "diffinv/rational_function.hpp"

namespace diffinv {

// Element (h, h0) of GL(n,Q) x| Q^n with exact entries; det(h) != 0 is
// checked at construction.
class AffineMap {
public:
    AffineMap(std::vector<std::vector<Rational>> h, std::vector<Rational> h0);

    static AffineMap identity(unsigned n);

    unsigned dim() const { return static_cast<unsigned>(h_.size()); }
    const std::vector<std::vector<Rational>>& h() const { return h_; }
    const std::vector<Rational>& h0() const { return h0_; }

    // (h, h0) o (h', h0') = (h h', h h0' + h0): apply `inner` first.
    AffineMap compose(const AffineMap& inner) const;
    AffineMap inverse() const;
    Rational det() const;
    bool is_orthogonal() const; // h^T h == I exactly

    bool operator==(const AffineMap& o) const { return h_ == o.h_ && h0_ == o.h0_; }

private:
    std::vector<std::vector<Rational>> h_;
    std::vector<Rational> h0_;
};

// The substitution x -> h x + h0 on jet variables: d^k x_i -> sum_j h_ij
// d^k x_j for k >= 1, and x_i -> sum_j h_ij x_j + h0_i.  Throws on x-indices
// beyond dim(m).
DiffRational act_affine(const DiffRational& f, const AffineMap& m);
DiffPolynomial act_affine(const DiffPolynomial& f, const AffineMap& m);

// Same action on block variables: z_1 affinely, the remaining blocks
// linearly.
DiffRational act_on_blocks(const DiffRational& f, const AffineMap& m);

} // namespace diffinv
