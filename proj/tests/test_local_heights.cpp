#include <doctest.h>

#include <random>

#include "mordell/heights.hpp"

using namespace mordell;

namespace {

LogCombination single(long p, const Rat& c) {
    LogCombination l;
    l.add(p, c);
    return l;
}

// Random affine point with integer coordinates: b := y^2 - x^3.
struct SamplePoint {
    Int b;
    RationalPoint P;
};

std::vector<SamplePoint> random_points(int count, std::mt19937_64& rng) {
    std::vector<SamplePoint> out;
    while (static_cast<int>(out.size()) < count) {
        const long x = static_cast<long>(rng() % 41) - 20;
        const long y = static_cast<long>(rng() % 41) - 20;
        const Int b = Int(y) * y - Int(x) * x * x;
        if (b == 0) continue;
        out.push_back({b, RationalPoint(x, y)});
    }
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("local_heights");

TEST_CASE("local height at p > 3") {
    // 5 does not divide Delta(E_-2) and |x|_5 = 1: everything vanishes.
    CHECK(local_height_p(-2, RationalPoint(3, 5), 5).value.is_zero());

    // ord_5(b) = 2 with b/25 = 1 a QR: correction (1/3) log 5 cancels
    // the discriminant term (4/12) log 5 exactly... with x = 0 the max
    // term vanishes, total (4/12 - 1/3) = 0.
    const auto h25 = local_height_p(25, RationalPoint(0, 5), 5);
    CHECK(h25.value.is_zero());
    CHECK(h25.correction_case == "ord=2, quadratic residue");

    // ord_7(x) = -2: (1/2) * 2 * log 7 + (2/12) log 7, no correction.
    const auto h7 = local_height_p(7, RationalPoint(Rat(3, 49), Rat(1)), 7);
    CHECK(h7.value == single(7, Rat(7, 6)));
    CHECK(h7.correction_case == "none");

    CHECK_THROWS_AS(local_height_p(7, RationalPoint::infinity(), 7), domain_error);
    CHECK_THROWS_AS(local_height_p(7, RationalPoint(3, 5), 3), domain_error);
}

TEST_CASE("local height at 3") {
    // Delta = -1728: -(1/12) log|Delta|_3 = (1/4) log 3; b = -2 = 7 mod 9.
    CHECK(local_height_3(-2, RationalPoint(3, 5)).value == single(3, Rat(1, 4)));

    // b = 10 = 1 mod 9 with ord_3(x + b) > 0, ord_3(x) = 0: the (1/4) log 3
    // correction cancels the (3/12) log 3 discriminant term.
    const auto h10 = local_height_3(10, RationalPoint(2, 1));
    CHECK(h10.value.is_zero());
    CHECK(h10.correction_case == "b=1,8 mod 9, singular");

    // b = 1, P = (2, 3): 1 = 1 mod 9 and ord_3(2 + 1) > 0.
    const auto h1 = local_height_3(1, RationalPoint(2, 3));
    CHECK(h1.value.is_zero());

    CHECK_THROWS_AS(local_height_3(729, RationalPoint(1, 1)), domain_error);
}

TEST_CASE("local height at 2") {
    // ord_2(Delta(E_-2)) = 6, no correction for b = 2 mod 4.
    CHECK(local_height_2(-2, RationalPoint(3, 5)).value == single(2, Rat(1, 2)));

    // b = 17 = 1 mod 8 with ord_2(x) > 0: (4/12 - 1/3) log 2 = 0.
    const auto h17 = local_height_2(17, RationalPoint(2, 5));
    CHECK(h17.value.is_zero());
    CHECK(h17.correction_case == "b=1 mod 8, singular");

    // b = 1, P = (0, 1).
    CHECK(local_height_2(1, RationalPoint(0, 1)).value.is_zero());

    // b = 16 mod 64: full log 2 correction via the minimal model.
    // ord_2(Delta) = 12, so (12/12) log 2 - log 2 = 0.
    const auto h16 = local_height_2(16, RationalPoint(0, 4));
    CHECK(h16.value.is_zero());
    CHECK(h16.correction_case == "b=16 mod 64, singular (minimal model)");

    CHECK_THROWS_AS(local_height_2(64, RationalPoint(1, 1)), domain_error);
}

TEST_CASE("non-archimedean sum") {
    LogCombination expected;
    expected.add(2, Rat(1, 2));
    expected.add(3, Rat(1, 4));
    CHECK(local_height_sum_nonarch(-2, RationalPoint(3, 5)) == expected);

    // Torsion point: the local contributions cancel exactly.
    CHECK(local_height_sum_nonarch(1, RationalPoint(2, 3)).is_zero());

    // 2P = (129/100, -383/1000) on E_-2 picks up places at 2 and 5.
    const RationalPoint twoP(Rat(129, 100), Rat(-383, 1000));
    const auto sum = local_height_sum_nonarch(-2, twoP);
    LogCombination expected2;
    expected2.add(2, Rat(1) + Rat(1, 2));  // max term + discriminant term
    expected2.add(3, Rat(1, 4));           // ord_3(129) = 1 > 0 but no case matches b = -2
    expected2.add(5, Rat(1));              // (1/2) * ord_5(100) = 1
    CHECK(sum == expected2);

    CHECK_THROWS_AS(local_height_sum_nonarch(64, RationalPoint(0, 8)), domain_error);
}

TEST_CASE("archimedean height satisfies the b < 0 floor") {
    const auto res = arch_height(-2, RationalPoint(3, 5));
    CHECK(res.branch == ArchBranch::NegativeB);
    // lambda_inf > (1/6)log|b| + (1/4)log 3 - (1/12)log|Delta| = -(1/3)log 2.
    const double floor = std::log(2.0) / 6 + std::log(3.0) / 4 - std::log(1728.0) / 12;
    CHECK(res.value.to_double() > floor);
    CHECK(res.tail_bound.to_double() < 1e-20);
}

TEST_CASE("archimedean height at the 3-torsion abscissa, b > 0") {
    // x = 0 on E_4: the duplication orbit is constant and the series sums
    // to -(1/4) log 3 exactly in the K -> infinity limit.
    const auto res = arch_height(4, RationalPoint(0, 2));
    CHECK(res.branch == ArchBranch::PositiveBTranslated);
    const Real expected = -log_int(3, 256) / 4l;
    CHECK(abs(res.value - expected).to_double() < 1e-23);

    // Same through the real-abscissa entry point.
    const auto res2 = arch_height_real(4, Real::of(0l, 256));
    CHECK(abs(res2.value - expected).to_double() < 1e-23);
}

TEST_CASE("archimedean series terminates exactly on 2-torsion") {
    // P = (-2, 0) on E_8: 2P = O, so the tail is exactly zero.
    const auto res = arch_height(8, RationalPoint(-2, 0));
    CHECK(res.tail_bound.is_zero());
    // lambda_inf = -(1/3) log 2 (head + single z = 9 term).
    CHECK(abs(res.value + log_int(2, 256) / 3l).to_double() < 1e-70);
}

TEST_CASE("arch_height rejects abscissas off E_b(R)") {
    CHECK_THROWS_AS(arch_height_real(-8, Real::of(1.5, 256)), domain_error);
    CHECK_THROWS_AS(arch_height(-2, RationalPoint::infinity()), domain_error);
    ArchHeightConfig bad;
    bad.precision_bits = 32;
    CHECK_THROWS_AS(arch_height(-2, RationalPoint(3, 5), bad), domain_error);
    bad.precision_bits = 256;
    bad.depth = 0;
    CHECK_THROWS_AS(arch_height(-2, RationalPoint(3, 5), bad), domain_error);
}

TEST_CASE("duplication consistency on random points") {
    std::mt19937_64 rng(2026);
    const auto samples = random_points(20, rng);
    for (const auto& [b, P] : samples) {
        const MordellCurve curve(b);
        const auto bd1 = canonical_height(b, P);
        const auto bd2 = canonical_height(b, double_point(curve, P));
        const double budget =
            2 * (bd1.error_bound.to_double() + bd2.error_bound.to_double()) + 1e-12;
        CHECK(abs(bd2.canonical - 4l * bd1.canonical).to_double() < budget);
    }
}

TEST_CASE("tail bound shrinks by at least 4 per depth step") {
    for (int k : {5, 9, 20}) {
        ArchHeightConfig a, bcfg;
        a.depth = k;
        bcfg.depth = k + 1;
        const auto ra = arch_height(-2, RationalPoint(3, 5), a);
        const auto rb = arch_height(-2, RationalPoint(3, 5), bcfg);
        CHECK(rb.tail_bound.to_double() <= ra.tail_bound.to_double() / 4 * 1.0000001);
        CHECK(abs(rb.value - ra.value) <= ra.tail_bound);
    }
}

TEST_SUITE_END();
