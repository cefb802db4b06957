#include "diffinv/derivation.hpp"

#include <stdexcept>

namespace diffinv {

DerivationSpec DerivationSpec::p_reparam(const DiffRational& p) {
    if (p.is_zero()) throw std::invalid_argument("reparametrization by the zero function");
    return DerivationSpec(DerivationKind::PReparam, p);
}

DiffRational delta_apply(const DiffRational& f, const DerivationSpec& spec) {
    switch (spec.kind()) {
    case DerivationKind::BaseD: return f.derive();
    case DerivationKind::GReparam:
    case DerivationKind::PReparam: return f.derive() / spec.p();
    }
    throw std::logic_error("unreachable");
}

const DiffRational& DeltaJetTable::jet(VarKey v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    DiffRational val;
    if (v.order == 0) {
        val = DiffRational::variable(v);
    } else {
        val = delta_apply(jet(VarKey{v.kind, v.a, v.b, v.order - 1}), spec_);
    }
    return memo_.emplace(v, std::move(val)).first->second;
}

DiffRational reinterpret(const DiffRational& f, const DerivationSpec& spec) {
    if (spec.kind() == DerivationKind::BaseD) return f;
    DeltaJetTable table(spec);
    std::map<VarKey, DiffRational> sub;
    for (const VarKey& v : f.variables())
        if (v.order >= 1) sub.emplace(v, table.jet(v));
    if (sub.empty()) return f;
    return substitute(f, sub);
}

DiffRational reinterpret(const DiffPolynomial& f, const DerivationSpec& spec) {
    return reinterpret(DiffRational(f), spec);
}

} // namespace diffinv
