#pragma once

#include <vector>

#include "mordell/numtheory.hpp"
#include "mordell/real.hpp"

namespace mordell {

/// The Mordell curve y^2 = x^3 + b over Q.
struct MordellCurve {
    Int b;
    SixthPowerDecomposition decomposition;
    Int discriminant;  // -432 b^2

    explicit MordellCurve(Int b_in);

    bool is_minimal_b() const { return decomposition.u == 1; }
};

/// A rational point: either the point at infinity or an affine pair,
/// kept in lowest terms with positive denominators (mpq canonical form).
class RationalPoint {
public:
    static RationalPoint infinity() { return RationalPoint(); }

    RationalPoint(Rat x, Rat y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {
        x_.canonicalize();
        y_.canonicalize();
    }
    RationalPoint(long x, long y) : RationalPoint(Rat(x), Rat(y)) {}
    RationalPoint(Int x, Int y) : RationalPoint(Rat(std::move(x)), Rat(std::move(y))) {}

    bool is_infinity() const { return infinity_; }
    const Rat& x() const {
        if (infinity_) throw domain_error("x() of the point at infinity");
        return x_;
    }
    const Rat& y() const {
        if (infinity_) throw domain_error("y() of the point at infinity");
        return y_;
    }

    bool operator==(const RationalPoint& o) const {
        if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
        return x_ == o.x_ && y_ == o.y_;
    }

private:
    RationalPoint() : infinity_(true) {}

    bool infinity_;
    Rat x_, y_;
};

bool contains(const MordellCurve& curve, const RationalPoint& P);

RationalPoint negate(const RationalPoint& P);

/// Chord-tangent group law. Throws if an affine input is not on the curve.
RationalPoint add(const MordellCurve& curve, const RationalPoint& P, const RationalPoint& Q);
RationalPoint double_point(const MordellCurve& curve, const RationalPoint& P);

enum class TorsionGroup { Z6, Z3, Z2, Trivial };

struct TorsionStructure {
    TorsionGroup group;
    std::vector<RationalPoint> points;  // the affine torsion points
};

/// Fueter's classification of the torsion of E_b(Q). Requires b
/// sixth-power-free; reduce first for general b.
TorsionStructure torsion_structure(const MordellCurve& curve);

bool is_torsion(const MordellCurve& curve, const RationalPoint& P);

/// log max(|num|, |den|) of x(P); 0 for the point at infinity.
Real naive_height(const RationalPoint& P, mpfr_prec_t prec = 256);

/// All integral (x, +-y) with |x| <= x_bound, ordered by x then y.
std::vector<RationalPoint> find_integral_points(const MordellCurve& curve, const Int& x_bound);

}  // namespace mordell
