#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffinv/groups.hpp"
#include "diffinv/point.hpp"
#include "diffinv/series.hpp"
#include "diffinv/unirational.hpp"

namespace diffinv {

// A concrete curve: one rational function of the parameter per coordinate.
struct CurveSpec {
    std::vector<UniRational> coords;
    unsigned dim() const { return static_cast<unsigned>(coords.size()); }
};

// Values d^k x_i at t0 for k <= max_order.  Throws EvalError on a pole.
Assignment jets_of_curve(const CurveSpec& curve, const Rational& t0, unsigned max_order);

// The curve as a differential point in the truncated jet ring at t0.
DiffValuePoint<Series> curve_series_point(const CurveSpec& curve, const Rational& t0,
                                          unsigned prec);

// The curve as a differential point of (Q(t), d/dt) — exact, untruncated.
DiffValuePoint<UniRational> curve_function_point(const CurveSpec& curve);

enum class RunMode { Symbolic, Evaluation };
enum class VerifyStatus { Pass, Fail, Degenerate };

struct EvalOptions {
    unsigned trials = 5;
    std::uint64_t seed = 12345;
    bool parallel = true;
    long coeff_range = 9;
};

struct VerifyReport {
    std::string identity;
    RunMode mode = RunMode::Symbolic;
    VerifyStatus status = VerifyStatus::Fail;
    unsigned trials_run = 0;
    std::uint64_t seed = 0;
    std::optional<Assignment> witness; // first failing point, by trial index
    std::string note;

    bool passed() const { return status == VerifyStatus::Pass; }
    std::string describe() const;
};

// Exact identity check.  Symbolic mode decides by cross-multiplication;
// evaluation mode draws exact random jet assignments (redrawing when a
// denominator vanishes, with a retry cap) and compares values.  Same seed,
// same report; the evaluation trials are independent and run in parallel
// when requested, aggregated deterministically by trial index.
VerifyReport verify_identity(const std::string& name, const DiffRational& lhs,
                             const DiffRational& rhs, RunMode mode,
                             const EvalOptions& opts = {});

// Values of the delta-reinterpreted generators of the group at t0, with
// delta = p^-1 d for the group's p (or the chosen gl variant).
std::vector<Rational> invariant_signature(const CurveSpec& curve, const Rational& t0,
                                          const GroupSpec& group,
                                          std::optional<PVariant> variant = {});

struct EquivalenceVerdict {
    bool signatures_equal = false;
    std::vector<unsigned> differing; // indices into the signature
    std::vector<Rational> sig1, sig2;
};

EquivalenceVerdict equivalence_check(const CurveSpec& c1, const Rational& t01,
                                     const CurveSpec& c2, const Rational& t02,
                                     const GroupSpec& group,
                                     std::optional<PVariant> variant = {});

// Residuals of the realization system at t0 for prescribed generator values:
// the (n+1)-order ODE residual per coordinate, the generator-matching
// residuals phi_j - b_j, and pbar<a,b> - 1 when the catalog provides pbar.
// All-zero output means the curve realizes the targets at that point.
std::vector<Rational> realization_residuals(const CurveSpec& curve, const Rational& t0,
                                            const std::vector<UniRational>& a,
                                            const std::vector<UniRational>& b,
                                            const GroupSpec& group,
                                            std::optional<PVariant> variant = {});

} // namespace diffinv
