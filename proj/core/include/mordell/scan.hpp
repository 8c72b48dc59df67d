#pragma once

#include <vector>

#include "mordell/families.hpp"

namespace mordell {

struct ScanOptions {
    Int b_min;
    Int b_max;
    Int x_max;
    std::vector<TheoremId> theorems;  // empty means all five
    int jobs = 1;
    ArchHeightConfig config{};
};

struct ScanSummaryEntry {
    TheoremId theorem;
    FamilySign sign;
    long count = 0;
    std::optional<Real> min_gap;
};

struct ScanResult {
    std::vector<BoundReport> reports;  // ordered by (b, x, y, theorem)
    std::vector<ScanSummaryEntry> summary;
    long curves = 0;
    long points = 0;
    bool all_hold = true;
};

/// Verifies every requested theorem on every integral point (|x| <=
/// x_max, y >= 0; heights are even in y) of every sixth-power-free b in
/// [b_min, b_max]. Lang theorems run on non-torsion points where the
/// curve-level hypotheses hold; HeightDiff runs on every affine point.
/// Deterministic: results are identical for any worker count.
ScanResult scan(const ScanOptions& options);

}  // namespace mordell
