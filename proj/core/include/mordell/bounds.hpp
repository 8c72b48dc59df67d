#pragma once

#include <optional>

#include "mordell/heights.hpp"

namespace mordell {

enum class TheoremId { Lang1, Lang2, Lang3, Lang4, HeightDiff };

std::string_view to_string(TheoremId t);
std::optional<TheoremId> theorem_from_string(std::string_view name);

struct Applicability {
    bool applicable;
    std::string reason;  // empty when applicable
};

/// Curve-level hypotheses of each theorem.
///   Lang1: b sixth-power-free, c_p = 1 for all p > 3.
///   Lang2: b sixth-power-free, every component-group element at p > 3
///          has order at most 2 (no c_p = 3).
///   Lang3: b sixth-power-free, c_p in {1,3} for all p > 3, some c_p = 3.
///   Lang4: b sixth-power-free.
///   HeightDiff: any nonzero b.
Applicability hypotheses(TheoremId theorem, const Int& b);

/// The residue-condition form of the Lang1/Lang2 hypotheses, kept as an
/// independent cross-check of the Tamagawa route.
bool hypotheses_via_residues(TheoremId theorem, const Int& b);

struct BoundValue {
    std::optional<Real> lower;  // lower bound on hhat (Lang) or on h/2 - hhat
    std::optional<Real> upper;  // only for HeightDiff
};

/// Evaluates the explicit constant expression of the theorem at b.
BoundValue bound_value(TheoremId theorem, const Int& b, mpfr_prec_t prec = 256);

struct BoundReport {
    TheoremId theorem = TheoremId::Lang4;
    Int b;
    RationalPoint point = RationalPoint::infinity();
    bool applicable = false;
    std::string reason;
    Real computed{64};  // hhat for Lang theorems, h/2 - hhat for HeightDiff
    std::optional<Real> lower, upper;
    Real gap{64};  // distance to the bound (min distance for intervals)
    bool holds = false;
    bool suspected_bug = false;  // an applicable proved bound failed
    Real error_budget{64};
};

BoundReport verify(TheoremId theorem, const Int& b, const RationalPoint& P,
                   const ArchHeightConfig& config = {});

/// Same, reusing an already-computed breakdown of P on E_b.
BoundReport verify_with(TheoremId theorem, const Int& b, const RationalPoint& P,
                        const HeightBreakdown& breakdown);

}  // namespace mordell
