#include "mordell/scan.hpp"

#include <atomic>
#include <thread>

namespace mordell {

namespace {

std::vector<TheoremId> all_theorems() {
    return {TheoremId::Lang1, TheoremId::Lang2, TheoremId::Lang3, TheoremId::Lang4,
            TheoremId::HeightDiff};
}

std::vector<BoundReport> scan_curve(const Int& b, const ScanOptions& opts,
                                    const std::vector<TheoremId>& theorems) {
    std::vector<BoundReport> reports;
    const MordellCurve curve(b);

    std::vector<TheoremId> active;
    for (TheoremId t : theorems) {
        if (hypotheses(t, b).applicable) active.push_back(t);
    }
    if (active.empty()) return reports;

    for (const auto& P : find_integral_points(curve, opts.x_max)) {
        if (P.y() < 0) continue;  // hhat(-P) = hhat(P)
        const auto breakdown = canonical_height(b, P, opts.config);
        for (TheoremId t : active) {
            if (t != TheoremId::HeightDiff && breakdown.torsion) continue;
            reports.push_back(verify_with(t, b, P, breakdown));
        }
    }
    return reports;
}

}  // namespace

ScanResult scan(const ScanOptions& options) {
    if (options.b_min > options.b_max) throw domain_error("scan: b_min > b_max");
    if (options.x_max < 1) throw domain_error("scan: x_max must be >= 1");
    const auto theorems = options.theorems.empty() ? all_theorems() : options.theorems;

    std::vector<Int> curves;
    for (Int b = options.b_min; b <= options.b_max; ++b) {
        if (b == 0) continue;
        if (!is_sixth_power_free(b)) continue;  // the reduced curve is scanned on its own
        curves.push_back(b);
    }

    std::vector<std::vector<BoundReport>> per_curve(curves.size());
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < curves.size(); ++i) {
            per_curve[i] = scan_curve(curves[i], options, theorems);
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < curves.size(); i = next.fetch_add(1)) {
                    per_curve[i] = scan_curve(curves[i], options, theorems);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    ScanResult result;
    result.curves = static_cast<long>(curves.size());
    for (auto& batch : per_curve) {
        for (auto& r : batch) {
            result.reports.push_back(std::move(r));
        }
    }

    // Per (theorem, sign) minimum gap; report order makes this deterministic.
    for (TheoremId t : theorems) {
        for (FamilySign s : {FamilySign::Neg, FamilySign::Pos}) {
            result.summary.push_back({t, s, 0, std::nullopt});
        }
    }
    const RationalPoint* last_point = nullptr;
    const Int* last_b = nullptr;
    for (const auto& r : result.reports) {
        if (!r.holds) result.all_hold = false;
        if (last_b == nullptr || *last_b != r.b || !(*last_point == r.point)) {
            ++result.points;
            last_b = &r.b;
            last_point = &r.point;
        }
        for (auto& entry : result.summary) {
            if (entry.theorem != r.theorem) continue;
            if ((entry.sign == FamilySign::Neg) != (r.b < 0)) continue;
            ++entry.count;
            if (!entry.min_gap || r.gap < *entry.min_gap) entry.min_gap = r.gap;
        }
    }
    return result;
}

}  // namespace mordell
