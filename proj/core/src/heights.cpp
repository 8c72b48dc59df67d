#include "mordell/heights.hpp"

namespace mordell {

namespace {

RationalPoint reduce_point(const RationalPoint& P, const Int& u) {
    if (u == 1 || P.is_infinity()) return P;
    const Int u2 = u * u;
    return RationalPoint(P.x() / u2, P.y() / (u2 * u));
}

}  // namespace

HeightBreakdown canonical_height(const Int& b, const RationalPoint& P,
                                 const ArchHeightConfig& config) {
    const MordellCurve curve(b);
    if (!contains(curve, P)) throw domain_error("canonical_height: P is not on E_b");
    const mpfr_prec_t prec = config.precision_bits;

    HeightBreakdown out{Real(prec), Real(prec),
                        ArchHeightResult{Real(prec), Real(prec), ArchBranch::NegativeB},
                        LogCombination{}, Real(prec), true,
                        curve.decomposition.b1, curve.decomposition.u};
    if (P.is_infinity()) return out;

    const MordellCurve reduced(curve.decomposition.b1);
    const RationalPoint Q = reduce_point(P, curve.decomposition.u);

    out.torsion = is_torsion(reduced, Q);
    out.naive = naive_height(Q, prec);
    out.arch = arch_height(reduced.b, Q, config);
    out.nonarch = local_height_sum_nonarch(reduced.b, Q);

    if (!out.torsion) {
        out.canonical = out.analytic_value();
    }
    // Rounding contributes ~2^-(prec-8) |value| on top of the series tail.
    Real rounding = mul_2si(abs(out.canonical), -(prec - 8));
    out.error_bound = out.arch.tail_bound + rounding;
    return out;
}

Real limit_oracle(const Int& b, const RationalPoint& P, int doublings, mpfr_prec_t prec) {
    if (doublings < 0 || doublings > 10) {
        throw domain_error("limit_oracle: doublings must be in [0, 10]");
    }
    const MordellCurve curve(b);
    if (!contains(curve, P)) throw domain_error("limit_oracle: P is not on E_b");
    if (P.is_infinity()) return Real(prec);

    const MordellCurve reduced(curve.decomposition.b1);
    if (is_torsion(reduced, reduce_point(P, curve.decomposition.u))) return Real(prec);

    RationalPoint Q = P;
    for (int i = 0; i < doublings; ++i) {
        Q = double_point(curve, Q);
    }
    return mul_2si(naive_height(Q, prec), -2 * doublings - 1);
}

Real height_difference(const Int& b, const RationalPoint& P, const ArchHeightConfig& config) {
    if (P.is_infinity()) throw domain_error("height_difference: P must be affine");
    const auto breakdown = canonical_height(b, P, config);
    return mul_2si(naive_height(P, config.precision_bits), -1) - breakdown.canonical;
}

}  // namespace mordell
