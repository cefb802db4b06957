#pragma once

#include <map>

#include "diffinv/rational_function.hpp"

namespace diffinv {

enum class DerivationKind { BaseD, GReparam, PReparam };

// Which derivation is in force: the base d, delta = g^-1 d with g a fresh
// indeterminate, or delta = p^-1 d with p a fixed nonzero rational function.
class DerivationSpec {
public:
    static DerivationSpec base() { return DerivationSpec(DerivationKind::BaseD, DiffRational(1)); }
    static DerivationSpec g_reparam() {
        return DerivationSpec(DerivationKind::GReparam, DiffRational::variable(VarKey::g()));
    }
    static DerivationSpec p_reparam(const DiffRational& p);

    DerivationKind kind() const { return kind_; }
    // The multiplier whose inverse scales d (g for GReparam, p for PReparam).
    const DiffRational& p() const { return p_; }

private:
    DerivationSpec(DerivationKind k, DiffRational p) : kind_(k), p_(std::move(p)) {}
    DerivationKind kind_;
    DiffRational p_;
};

// One application of the derivation named by `spec` to f.
DiffRational delta_apply(const DiffRational& f, const DerivationSpec& spec);

// Memoized delta-jets delta^k v for the indeterminates of one spec.
class DeltaJetTable {
public:
    explicit DeltaJetTable(DerivationSpec spec) : spec_(std::move(spec)) {}
    const DiffRational& jet(VarKey v);

private:
    DerivationSpec spec_;
    std::map<VarKey, DiffRational> memo_;
};

// f with every jet d^k v replaced by the k-fold delta-jet delta^k v.  The
// identity on order-zero variables; the whole map is a field homomorphism.
DiffRational reinterpret(const DiffRational& f, const DerivationSpec& spec);
DiffRational reinterpret(const DiffPolynomial& f, const DerivationSpec& spec);

} // namespace diffinv
