#include "mordell/curve.hpp"

#include <cmath>
#include <cstdint>

namespace mordell {

MordellCurve::MordellCurve(Int b_in) : b(std::move(b_in)), decomposition(sixth_power_free(b)) {
    discriminant = -432 * b * b;
}

bool contains(const MordellCurve& curve, const RationalPoint& P) {
    if (P.is_infinity()) return true;
    return P.y() * P.y() == P.x() * P.x() * P.x() + curve.b;
}

RationalPoint negate(const RationalPoint& P) {
    if (P.is_infinity()) return P;
    return RationalPoint(P.x(), -P.y());
}

namespace {

void require_on_curve(const MordellCurve& curve, const RationalPoint& P) {
    if (!contains(curve, P)) throw domain_error("point is not on the curve");
}

}  // namespace

RationalPoint double_point(const MordellCurve& curve, const RationalPoint& P) {
    require_on_curve(curve, P);
    if (P.is_infinity()) return P;
    if (P.y() == 0) return RationalPoint::infinity();  // 2-torsion
    const Rat lambda = 3 * P.x() * P.x() / (2 * P.y());
    const Rat x3 = lambda * lambda - 2 * P.x();
    const Rat y3 = lambda * (P.x() - x3) - P.y();
    return RationalPoint(x3, y3);
}

RationalPoint add(const MordellCurve& curve, const RationalPoint& P, const RationalPoint& Q) {
    require_on_curve(curve, P);
    require_on_curve(curve, Q);
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (P.x() == Q.x()) {
        if (P.y() == -Q.y()) return RationalPoint::infinity();
        return double_point(curve, P);
    }
    const Rat lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    const Rat x3 = lambda * lambda - P.x() - Q.x();
    const Rat y3 = lambda * (P.x() - x3) - P.y();
    return RationalPoint(x3, y3);
}

TorsionStructure torsion_structure(const MordellCurve& curve) {
    if (!curve.is_minimal_b()) {
        throw domain_error("torsion_structure: b must be sixth-power-free");
    }
    const Int& b = curve.b;
    if (b == 1) {
        return {TorsionGroup::Z6,
                {RationalPoint(2, 3), RationalPoint(2, -3), RationalPoint(0, 1),
                 RationalPoint(0, -1), RationalPoint(-1, 0)}};
    }
    if (b == -432) {
        return {TorsionGroup::Z3, {RationalPoint(12, 36), RationalPoint(12, -36)}};
    }
    if (b > 0) {
        if (auto t = integer_sqrt_exact(b)) {
            return {TorsionGroup::Z3, {RationalPoint(Int(0), *t), RationalPoint(Int(0), Int(-*t))}};
        }
    }
    Int t;
    if (mpz_root(t.get_mpz_t(), b.get_mpz_t(), 3) != 0) {
        return {TorsionGroup::Z2, {RationalPoint(-t, Int(0))}};
    }
    return {TorsionGroup::Trivial, {}};
}

bool is_torsion(const MordellCurve& curve, const RationalPoint& P) {
    if (P.is_infinity()) return true;
    const auto tors = torsion_structure(curve);
    for (const auto& T : tors.points) {
        if (T == P) return true;
    }
    return false;
}

Real naive_height(const RationalPoint& P, mpfr_prec_t prec) {
    if (P.is_infinity()) return Real(prec);
    Int m = std::max(Int(abs(P.x().get_num())), Int(P.x().get_den()));
    return log_int(m, prec);
}

namespace {

// int64 fast path: x^3 + b evaluated in __int128.
bool fits_fast_path(const MordellCurve& curve, const Int& x_bound) {
    return x_bound.fits_slong_p() && x_bound < 1500000 && curve.b.fits_slong_p();
}

std::vector<RationalPoint> integral_points_fast(long b, long bound) {
    std::vector<RationalPoint> points;
    for (long x = -bound; x <= bound; ++x) {
        const __int128 v = static_cast<__int128>(x) * x * x + b;
        if (v < 0) continue;
        auto ux = static_cast<unsigned __int128>(v);
        auto y = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(ux)));
        while (y > 0 && static_cast<unsigned __int128>(y) * y > ux) --y;
        while (static_cast<unsigned __int128>(y + 1) * (y + 1) <= ux) ++y;
        if (static_cast<unsigned __int128>(y) * y != ux) continue;
        if (y == 0) {
            points.emplace_back(Int(x), Int(0));
        } else {
            points.emplace_back(Int(x), Int(-static_cast<long>(y)));
            points.emplace_back(Int(x), Int(static_cast<long>(y)));
        }
    }
    return points;
}

}  // namespace

std::vector<RationalPoint> find_integral_points(const MordellCurve& curve, const Int& x_bound) {
    if (x_bound < 1) throw domain_error("find_integral_points: x_bound must be >= 1");
    if (fits_fast_path(curve, x_bound)) {
        return integral_points_fast(curve.b.get_si(), x_bound.get_si());
    }
    std::vector<RationalPoint> points;
    for (Int x = -x_bound; x <= x_bound; ++x) {
        const Int v = x * x * x + curve.b;
        if (v < 0) continue;
        if (auto y = integer_sqrt_exact(v)) {
            if (*y == 0) {
                points.emplace_back(x, Int(0));
            } else {
                points.emplace_back(x, Int(-*y));
                points.emplace_back(x, *y);
            }
        }
    }
    return points;
}

}  // namespace mordell
