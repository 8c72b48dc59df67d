#include <doctest.h>

#include <cmath>

#include "mordell/bounds.hpp"

using namespace mordell;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("hypotheses") {
    CHECK(hypotheses(TheoremId::Lang1, -2).applicable);
    CHECK_FALSE(hypotheses(TheoremId::Lang1, 25).applicable);  // c_5 = 3
    CHECK(hypotheses(TheoremId::Lang3, 25).applicable);
    CHECK_FALSE(hypotheses(TheoremId::Lang2, 25).applicable);
    CHECK_FALSE(hypotheses(TheoremId::Lang3, -2).applicable);  // no c_p = 3
    CHECK(hypotheses(TheoremId::Lang4, -2).applicable);
    CHECK(hypotheses(TheoremId::HeightDiff, 128).applicable);
    CHECK_FALSE(hypotheses(TheoremId::Lang4, 128).applicable);  // not sixth-power-free

    // c_5 = 2 at b = -125: allowed by Lang2 (component group exponent 2),
    // rejected by Lang1 and Lang3.
    CHECK_FALSE(hypotheses(TheoremId::Lang1, -125).applicable);
    CHECK(hypotheses(TheoremId::Lang2, -125).applicable);
    CHECK_FALSE(hypotheses(TheoremId::Lang3, -125).applicable);

    // c_7 = 4 at b = -343: component group (Z/2)^2, still fine for Lang2.
    CHECK(hypotheses(TheoremId::Lang2, -343).applicable);

    CHECK_THROWS_AS(hypotheses(TheoremId::Lang1, 0), domain_error);
}

TEST_CASE("Tamagawa route matches the residue-condition route") {
    for (long b = -500; b <= 500; ++b) {
        if (b == 0 || !is_sixth_power_free(b)) continue;
        CHECK(hypotheses(TheoremId::Lang1, b).applicable == hypotheses_via_residues(TheoremId::Lang1, b));
        CHECK(hypotheses(TheoremId::Lang2, b).applicable == hypotheses_via_residues(TheoremId::Lang2, b));
    }
}

TEST_CASE("bound values") {
    const double ln2 = std::log(2.0), ln3 = std::log(3.0);
    auto lower = [](TheoremId t, long b) { return bound_value(t, b).lower->to_double(); };

    CHECK(lower(TheoremId::Lang4, -2) == doctest::Approx(ln2 / 36 - 0.2247).epsilon(1e-12));
    CHECK(lower(TheoremId::Lang1, -2) == doctest::Approx(ln2 / 6 - ln2 - ln3 / 2).epsilon(1e-12));
    CHECK(lower(TheoremId::Lang1, 10) ==
          doctest::Approx(std::log(10.0) / 6 - 2 * ln2 / 3 - 3 * ln3 / 4 - 0.006).epsilon(1e-12));
    CHECK(lower(TheoremId::Lang2, -10) ==
          doctest::Approx(std::log(10.0) / 24 - ln2 / 4 - 5 * ln3 / 48).epsilon(1e-12));
    CHECK(lower(TheoremId::Lang3, 10) ==
          doctest::Approx(std::log(10.0) / 18 - ln2 / 3 - ln3 / 6 - 0.004).epsilon(1e-12));

    const auto hd = bound_value(TheoremId::HeightDiff, -2);
    CHECK(hd.lower->to_double() == doctest::Approx(-ln3 / 4 - 0.005).epsilon(1e-12));
    CHECK(hd.upper->to_double() == doctest::Approx(ln2 / 6 + ln2 / 3 + ln3 / 4).epsilon(1e-12));
    const auto hdp = bound_value(TheoremId::HeightDiff, 8);
    CHECK(hdp.lower->to_double() ==
          doctest::Approx(-std::log(8.0) / 6 - ln2 / 3 - 0.007 - 0.04).epsilon(1e-12));
    CHECK(hdp.upper->to_double() ==
          doctest::Approx(std::log(8.0) / 6 + ln2 / 3 + ln3 / 4 + 0.004).epsilon(1e-12));
}

TEST_CASE("verify") {
    const auto r = verify(TheoremId::Lang4, -2, RationalPoint(3, 5));
    CHECK(r.applicable);
    CHECK(r.holds);
    CHECK(r.gap.to_double() > 0);
    CHECK_FALSE(r.suspected_bug);

    const auto hd = verify(TheoremId::HeightDiff, 9, RationalPoint(0, 3));
    CHECK(hd.applicable);
    CHECK(hd.holds);
    CHECK(hd.computed.is_zero());

    const auto na = verify(TheoremId::Lang1, 25, RationalPoint(0, 5));
    CHECK_FALSE(na.applicable);
    CHECK(na.holds);  // vacuous

    const auto tors = verify(TheoremId::Lang4, 1, RationalPoint(2, 3));
    CHECK_FALSE(tors.applicable);
    CHECK(tors.reason == "P is a torsion point");

    CHECK_THROWS_AS(verify(TheoremId::Lang4, -2, RationalPoint::infinity()), domain_error);
}

TEST_SUITE_END();
