#pragma once

#include "mordell/bounds.hpp"

namespace mordell {

enum class FamilySign { Neg, Pos };
enum class DiffBoundSide { Upper, Lower };

std::string_view to_string(FamilySign s);

/// One member of a sharpness family: a curve E_b and a point P on it,
/// generated from the family's closed-form expressions. Side-conditions
/// the construction assumes (parity, coprimality, square-/cube-freeness)
/// are checked, not trusted; failures mark the instance unusable.
struct FamilyInstance {
    TheoremId theorem = TheoremId::Lang1;
    FamilySign sign = FamilySign::Neg;
    Int parameter;
    Int b;
    RationalPoint point = RationalPoint::infinity();
    bool usable = true;
    std::string note;
};

/// The families demonstrating sharpness of each theorem. For HeightDiff
/// this yields the family approaching the upper bound of the given sign;
/// height_diff_family selects either bound side.
FamilyInstance family(TheoremId theorem, FamilySign sign, const Int& parameter);

FamilyInstance height_diff_family(FamilySign sign, DiffBoundSide side, const Int& parameter);

}  // namespace mordell
