#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffinv/affine.hpp"
#include "diffinv/invariants.hpp"
#include "diffinv/rng.hpp"
#include "diffinv/series.hpp"

namespace diffinv {

enum class SamplerKind { GLAffine, GLLinear, O2, O2Affine, None };

// Which generator family the t_i symbols of pbar refer to.
enum class PbarBinding { Phis, WRatios };

// A subgroup of the affine group with the data the constructions need: an
// exact element sampler, algebraic generators phi_j over the block variables
// z_1..z_{n+1}, the chosen weight-1 normalizer p, and optionally the
// relation pbar expressing p through the generators.
struct GroupSpec {
    std::string name;
    unsigned n = 2;
    SamplerKind sampler = SamplerKind::None;
    std::vector<DiffRational> phis; // over z-block variables
    DiffRational p;                 // over x-jets
    std::optional<DiffRational> pbar; // over t_i jets
    PbarBinding pbar_binding = PbarBinding::Phis;
    // When set, engines evaluate p through the gl value routines instead of
    // the symbolic expression (the gl p is large; its value is cheap).
    std::optional<PVariant> gl_p_variant;
};

std::vector<std::string> builtin_group_names();
GroupSpec builtin_group(const std::string& name, unsigned n);

// Exact rational rotation/reflection from the circle parametrization
// ((1-tau^2)/(1+tau^2), 2tau/(1+tau^2)).
AffineMap o2_rotation(const Rational& tau);
AffineMap o2_reflection(const Rational& tau);

// Deterministic per seed; every returned element satisfies the group's
// defining predicate exactly.
AffineMap sample_element(const GroupSpec& group, std::uint64_t seed);

// phi_j with z_{i,b} |-> d^{b-1} x_i.
std::vector<DiffRational> phi_on_jets(const GroupSpec& group);

// {W_i/W : i = 1..n} followed by the substituted phi_j.
std::vector<DiffRational> h_generators(const GroupSpec& group);

DiffRational example3_p(); // (x, dx) for n = 2
DiffRational example4_p(); // d( det[dx,d^2x]^2 / (dx,dx)^3 ) for n = 2

struct InvarianceReport {
    std::string subject;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    bool passed = false;
    std::optional<unsigned> first_failure;
    std::string note;
};

// Per-trial exact comparison of f against act_affine(f, h), h sampled from
// the group.  Symbolic: no evaluation points involved.
InvarianceReport check_H_invariance(const DiffRational& f, const GroupSpec& group,
                                    unsigned trials, std::uint64_t seed);

// Per-trial exact comparison of f<x> against f^{g^-1 d}<h x + h0>, both
// evaluated at a random differential point; g is drawn as a random jet.
InvarianceReport check_FH_invariance(const DiffRational& f, const GroupSpec& group,
                                     unsigned trials, std::uint64_t seed);

// The same check for the delta-reinterpreted generator f^delta, delta =
// p^-1 d with the group's p.  The reinterpretation is applied through the
// point's derivation, never expanded symbolically.
InvarianceReport check_FH_invariance_reparam(const DiffRational& f_dform,
                                             const GroupSpec& group, unsigned trials,
                                             std::uint64_t seed,
                                             std::optional<PVariant> variant = {});

// Value of the group's p at a differential point.
template <class R>
R group_p_value(const GroupSpec& group, DiffValuePoint<R>& pt) {
    if (group.gl_p_variant) return value_p(group.n, *group.gl_p_variant, pt);
    return pt.value(group.p);
}

// Random series for every indeterminate family appearing in `vars`.
std::map<VarKey, Series> random_series_bases(const std::set<VarKey>& vars, Rng& rng,
                                             unsigned prec, long range);

// x_i |-> sum_j h_ij x_j + h0_i on the base values; other families pass
// through untouched.
std::map<VarKey, Series> transform_series_bases(const std::map<VarKey, Series>& base,
                                                const AffineMap& m);

} // namespace diffinv
