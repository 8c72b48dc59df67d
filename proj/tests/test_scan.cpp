#include <doctest.h>

#include "mordell/scan.hpp"

using namespace mordell;

TEST_SUITE_BEGIN("scan");

namespace {

std::string fingerprint(const ScanResult& r) {
    std::string s;
    for (const auto& rep : r.reports) {
        s += rep.b.get_str();
        s += '|';
        s += rep.point.x().get_str();
        s += '|';
        s += rep.point.y().get_str();
        s += '|';
        s += to_string(rep.theorem);
        s += '|';
        s += rep.gap.str(40);
        s += rep.holds ? 'H' : 'F';
        s += '\n';
    }
    return s;
}

}  // namespace

TEST_CASE("scan results are identical across worker counts") {
    ScanOptions one;
    one.b_min = -40;
    one.b_max = 40;
    one.x_max = 25;
    one.jobs = 1;
    ScanOptions four = one;
    four.jobs = 4;

    const auto r1 = scan(one);
    const auto r4 = scan(four);
    CHECK(r1.reports.size() == r4.reports.size());
    CHECK(fingerprint(r1) == fingerprint(r4));
    CHECK(r1.all_hold);
    CHECK(r1.curves == 79);  // 81 values minus 0 and -64, 64... 64 = 2^6
}

TEST_CASE("curve with only torsion points yields no Lang reports") {
    ScanOptions opts;
    opts.b_min = 1;
    opts.b_max = 1;
    opts.x_max = 100;
    opts.theorems = {TheoremId::Lang1};
    const auto r = scan(opts);
    CHECK(r.reports.empty());

    opts.theorems = {TheoremId::HeightDiff};
    const auto rhd = scan(opts);
    CHECK(rhd.reports.size() == 3);  // (-1,0), (0,1), (2,3)
    for (const auto& rep : rhd.reports) CHECK(rep.holds);
}

TEST_CASE("non-sixth-power-free b are skipped") {
    ScanOptions opts;
    opts.b_min = 60;
    opts.b_max = 70;
    opts.x_max = 10;
    const auto r = scan(opts);
    CHECK(r.curves == 10);  // 64 excluded
    for (const auto& rep : r.reports) CHECK(rep.b != 64);
}

TEST_CASE("summary tracks minimum gaps per sign") {
    ScanOptions opts;
    opts.b_min = -10;
    opts.b_max = 10;
    opts.x_max = 20;
    opts.theorems = {TheoremId::Lang4};
    const auto r = scan(opts);
    bool saw_neg = false, saw_pos = false;
    for (const auto& e : r.summary) {
        if (e.count == 0) continue;
        CHECK(e.min_gap.has_value());
        CHECK(e.min_gap->to_double() > 0);
        (e.sign == FamilySign::Neg ? saw_neg : saw_pos) = true;
    }
    CHECK(saw_neg);
    CHECK(saw_pos);
}

TEST_SUITE_END();
