#include <doctest.h>

#include <random>

#include "mordell/curve.hpp"

using namespace mordell;

TEST_SUITE_BEGIN("curve");

TEST_CASE("contains") {
    CHECK(contains(MordellCurve(1), RationalPoint(2, 3)));
    CHECK(contains(MordellCurve(-2), RationalPoint(3, 5)));
    CHECK_FALSE(contains(MordellCurve(1), RationalPoint(1, 1)));
    CHECK(contains(MordellCurve(1), RationalPoint::infinity()));
}

TEST_CASE("group law basics") {
    const MordellCurve e1(1);
    CHECK(double_point(e1, RationalPoint(2, 3)) == RationalPoint(0, 1));
    CHECK(double_point(e1, RationalPoint(-1, 0)).is_infinity());
    CHECK(double_point(MordellCurve(8), RationalPoint(-2, 0)).is_infinity());

    const RationalPoint P(2, 3);
    CHECK(add(e1, P, RationalPoint::infinity()) == P);
    CHECK(add(e1, RationalPoint::infinity(), P) == P);
    CHECK(add(e1, P, negate(P)).is_infinity());
    CHECK_THROWS_AS(add(e1, RationalPoint(1, 1), P), domain_error);
}

TEST_CASE("group law properties on a rank-one curve") {
    const MordellCurve c(-2);
    const RationalPoint P(3, 5);
    // Small multiples of the generator.
    std::vector<RationalPoint> pts{RationalPoint::infinity(), P};
    for (int i = 2; i <= 6; ++i) pts.push_back(add(c, pts.back(), P));

    CHECK(double_point(c, P) == add(c, P, P));
    CHECK(double_point(c, pts[3]) == pts[6]);

    for (const auto& A : pts) {
        for (const auto& B : pts) {
            CHECK(add(c, A, B) == add(c, B, A));
            for (const auto& C : pts) {
                CHECK(add(c, add(c, A, B), C) == add(c, A, add(c, B, C)));
            }
        }
    }
}

TEST_CASE("torsion classification") {
    const auto z6 = torsion_structure(MordellCurve(1));
    CHECK(z6.group == TorsionGroup::Z6);
    REQUIRE(z6.points.size() == 5);
    CHECK(is_torsion(MordellCurve(1), RationalPoint(2, 3)));
    CHECK(is_torsion(MordellCurve(1), RationalPoint(0, 1)));
    CHECK(is_torsion(MordellCurve(1), RationalPoint(-1, 0)));

    const auto z3 = torsion_structure(MordellCurve(-432));
    CHECK(z3.group == TorsionGroup::Z3);
    CHECK(z3.points[0] == RationalPoint(12, 36));

    CHECK(torsion_structure(MordellCurve(-2)).group == TorsionGroup::Trivial);
    CHECK_FALSE(is_torsion(MordellCurve(-2), RationalPoint(3, 5)));
    CHECK(is_torsion(MordellCurve(4), RationalPoint(0, 2)));
    CHECK(torsion_structure(MordellCurve(8)).group == TorsionGroup::Z2);
    CHECK(torsion_structure(MordellCurve(-8)).group == TorsionGroup::Z2);
    CHECK(torsion_structure(MordellCurve(-8)).points[0] == RationalPoint(2, 0));

    CHECK_THROWS_AS(torsion_structure(MordellCurve(64)), domain_error);
}

TEST_CASE("torsion points have the advertised order") {
    for (long b : {1L, 4L, 9L, 25L, -432L, 8L, 27L, -27L}) {
        const MordellCurve curve(b);
        const auto tors = torsion_structure(curve);
        const int order = tors.group == TorsionGroup::Z6   ? 6
                          : tors.group == TorsionGroup::Z3 ? 3
                          : tors.group == TorsionGroup::Z2 ? 2
                                                           : 1;
        for (const auto& P : tors.points) {
            RationalPoint acc = RationalPoint::infinity();
            for (int i = 0; i < order; ++i) acc = add(curve, acc, P);
            CHECK(acc.is_infinity());
        }
    }
}

TEST_CASE("naive height") {
    CHECK(naive_height(RationalPoint(3, 5)).to_double() == doctest::Approx(std::log(3.0)));
    CHECK(naive_height(RationalPoint(Rat(5, 8), Rat(1))).to_double() ==
          doctest::Approx(std::log(8.0)));
    CHECK(naive_height(RationalPoint(0, 1)).is_zero());
    CHECK(naive_height(RationalPoint::infinity()).is_zero());
}

TEST_CASE("find_integral_points") {
    const auto pts = find_integral_points(MordellCurve(-2), 10);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == RationalPoint(3, -5));
    CHECK(pts[1] == RationalPoint(3, 5));

    const auto p1 = find_integral_points(MordellCurve(1), 10);
    CHECK(p1.size() == 5);  // (-1,0), (0,+-1), (2,+-3)

    const auto big = find_integral_points(MordellCurve(106704), 12);
    bool found = false;
    for (const auto& P : big) {
        if (P == RationalPoint(-12, 324)) found = true;
        CHECK(contains(MordellCurve(106704), P));
    }
    CHECK(found);

    // Out of the int64 fast path: b with ~80 bits.
    const Int huge = Int("1000000000000") * Int("1000000000000");
    const auto hp = find_integral_points(MordellCurve(huge), 2);
    bool found_zero = false;
    for (const auto& P : hp) {
        CHECK(contains(MordellCurve(huge), P));
        if (P.x() == 0) found_zero = true;
    }
    CHECK(found_zero);

    CHECK_THROWS_AS(find_integral_points(MordellCurve(1), 0), domain_error);
}

TEST_SUITE_END();
