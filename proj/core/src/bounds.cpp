#include "mordell/bounds.hpp"

namespace mordell {

std::string_view to_string(TheoremId t) {
    switch (t) {
        case TheoremId::Lang1: return "lang1";
        case TheoremId::Lang2: return "lang2";
        case TheoremId::Lang3: return "lang3";
        case TheoremId::Lang4: return "lang4";
        case TheoremId::HeightDiff: return "heightdiff";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    if (name == "lang1") return TheoremId::Lang1;
    if (name == "lang2") return TheoremId::Lang2;
    if (name == "lang3") return TheoremId::Lang3;
    if (name == "lang4") return TheoremId::Lang4;
    if (name == "heightdiff") return TheoremId::HeightDiff;
    return std::nullopt;
}

Applicability hypotheses(TheoremId theorem, const Int& b) {
    if (b == 0) throw domain_error("hypotheses: b must be nonzero");
    if (theorem == TheoremId::HeightDiff) return {true, ""};

    if (!is_sixth_power_free(b)) return {false, "b is not sixth-power-free"};

    bool some_c3 = false;
    for (const auto& f : factorize(b)) {
        if (f.prime <= 3) continue;
        const int c = reduction_at(b, f.prime).tamagawa;
        const std::string at = " at p = " + f.prime.get_str();
        switch (theorem) {
            case TheoremId::Lang1:
                if (c != 1) return {false, "c_p = " + std::to_string(c) + at};
                break;
            case TheoremId::Lang2:
                if (c == 3) return {false, "component group of order 3" + at};
                break;
            case TheoremId::Lang3:
                if (c != 1 && c != 3) return {false, "c_p = " + std::to_string(c) + at};
                if (c == 3) some_c3 = true;
                break;
            default:
                break;
        }
    }
    if (theorem == TheoremId::Lang3 && !some_c3) {
        return {false, "no prime p > 3 with c_p = 3"};
    }
    return {true, ""};
}

bool hypotheses_via_residues(TheoremId theorem, const Int& b) {
    if (!is_sixth_power_free(b)) return false;
    for (const auto& f : factorize(b)) {
        if (f.prime <= 3) continue;
        const unsigned long e = f.exponent;
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), e);
        const Int r = b / pe;
        switch (theorem) {
            case TheoremId::Lang1:
                // (-1)^e b/p^e must not be a 2nd/3rd/2nd power residue
                // for e = 2/3/4.
                if (e == 2 && is_quadratic_residue(r, f.prime)) return false;
                if (e == 3 && is_cubic_residue(-r, f.prime)) return false;
                if (e == 4 && is_quadratic_residue(r, f.prime)) return false;
                break;
            case TheoremId::Lang2:
                if ((e == 2 || e == 4) && is_quadratic_residue(r, f.prime)) return false;
                break;
            default:
                throw domain_error("hypotheses_via_residues: only Lang1/Lang2");
        }
    }
    return true;
}

namespace {

// The paper's published decimal constants, kept as exact decimals.
const Rat kSlack006(3, 500);       // 0.006
const Rat kSlack002(1, 500);       // 0.002
const Rat kSlack004(1, 250);       // 0.004
const Rat kLang4Neg(2247, 10000);  // 0.2247
const Rat kLang4Pos(2262, 10000);  // 0.2262
const Rat kDiff005(1, 200);        // 0.005
const Rat kDiff007(7, 1000);       // 0.007
const Rat kDiff008(2, 25);         // 0.08

}  // namespace

BoundValue bound_value(TheoremId theorem, const Int& b, mpfr_prec_t prec) {
    if (b == 0) throw domain_error("bound_value: b must be nonzero");
    const bool neg = b < 0;
    const Real L = log_int(abs(b), prec);
    const Real ln2 = log_int(2, prec);
    const Real ln3 = log_int(3, prec);
    auto rat = [&](const Rat& q) { return Real::of(q, prec); };

    switch (theorem) {
        case TheoremId::Lang1:
            if (neg) return {L / 6l - ln2 - ln3 / 2l, std::nullopt};
            return {L / 6l - 2l * ln2 / 3l - 3l * ln3 / 4l - rat(kSlack006), std::nullopt};
        case TheoremId::Lang2:
            if (neg) return {L / 24l - ln2 / 4l - 5l * ln3 / 48l, std::nullopt};
            return {L / 24l - ln2 / 6l - ln3 / 6l - rat(kSlack002), std::nullopt};
        case TheoremId::Lang3:
            if (neg) return {L / 18l - 2l * ln2 / 9l - ln3 / 4l - rat(kSlack004), std::nullopt};
            return {L / 18l - ln2 / 3l - ln3 / 6l - rat(kSlack004), std::nullopt};
        case TheoremId::Lang4:
            if (neg) return {L / 36l - rat(kLang4Neg), std::nullopt};
            return {L / 36l - rat(kLang4Pos), std::nullopt};
        case TheoremId::HeightDiff: {
            const Real upper_core = L / 6l + ln2 / 3l + ln3 / 4l;
            if (neg) return {-ln3 / 4l - rat(kDiff005), upper_core};
            const Real binv = Real::of(1l, prec) / cbrt(Real::of(b, prec));
            return {-L / 6l - ln2 / 3l - rat(kDiff007) - rat(kDiff008) * binv,
                    upper_core + rat(kSlack004)};
        }
    }
    return {};
}

BoundReport verify(TheoremId theorem, const Int& b, const RationalPoint& P,
                   const ArchHeightConfig& config) {
    return verify_with(theorem, b, P, canonical_height(b, P, config));
}

BoundReport verify_with(TheoremId theorem, const Int& b, const RationalPoint& P,
                        const HeightBreakdown& breakdown) {
    if (P.is_infinity()) throw domain_error("verify: P must be affine");
    const mpfr_prec_t prec = breakdown.canonical.precision();

    BoundReport report;
    report.theorem = theorem;
    report.b = b;
    report.point = P;
    report.computed = Real(prec);
    report.gap = Real(prec);
    report.error_budget = Real(prec);

    const auto app = hypotheses(theorem, b);
    report.applicable = app.applicable;
    report.reason = app.reason;
    if (theorem != TheoremId::HeightDiff && report.applicable && breakdown.torsion) {
        report.applicable = false;
        report.reason = "P is a torsion point";
    }
    if (!report.applicable) {
        report.holds = true;  // vacuous
        return report;
    }

    const auto bounds = bound_value(theorem, b, prec);
    report.lower = bounds.lower;
    report.upper = bounds.upper;
    report.error_budget = breakdown.error_bound + mul_2si(Real::of(1l, prec), -(prec / 2));

    if (theorem == TheoremId::HeightDiff) {
        report.computed = mul_2si(naive_height(P, prec), -1) - breakdown.canonical;
        const Real gl = report.computed - *report.lower;
        const Real gu = *report.upper - report.computed;
        report.gap = gl < gu ? gl : gu;
    } else {
        report.computed = breakdown.canonical;
        report.gap = report.computed - *report.lower;
    }
    report.holds = report.gap > -report.error_budget;
    report.suspected_bug = !report.holds;
    return report;
}

}  // namespace mordell
