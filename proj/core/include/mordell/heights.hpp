#pragma once

#include "mordell/local_heights.hpp"

namespace mordell {

/// Canonical height of a point together with its local constituents.
/// Heights are computed on the sixth-power-free model E_{b1}; the
/// transform (x,y) -> (x/u^2, y/u^3) is recorded in u.
struct HeightBreakdown {
    Real canonical;     // exactly 0 for torsion points
    Real naive;         // naive height of x on the reduced model
    ArchHeightResult arch;
    LogCombination nonarch;
    Real error_bound;
    bool torsion = false;
    Int reduced_b;
    Int u;

    /// arch + nonarch without the torsion shortcut; near 0 for torsion.
    Real analytic_value() const {
        return arch.value + nonarch.to_real(arch.value.precision());
    }
};

/// Canonical height via the sum of local heights. Accepts any nonzero b
/// and reduces internally. Throws if P is not on E_b.
HeightBreakdown canonical_height(const Int& b, const RationalPoint& P,
                                 const ArchHeightConfig& config = {});

/// Independent oracle: (1/2) h(2^n P) / 4^n with exact rational doubling
/// and exact naive height. Returns 0 for torsion points. n <= 10.
Real limit_oracle(const Int& b, const RationalPoint& P, int doublings,
                  mpfr_prec_t prec = 256);

/// (1/2) h(P) - hhat(P), with the naive height taken on the given model.
Real height_difference(const Int& b, const RationalPoint& P,
                       const ArchHeightConfig& config = {});

}  // namespace mordell
