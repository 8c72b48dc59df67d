#include "mordell/families.hpp"

namespace mordell {

std::string_view to_string(FamilySign s) {
    return s == FamilySign::Neg ? "neg" : "pos";
}

namespace {

FamilyInstance make(TheoremId t, FamilySign s, const Int& m, Int b, RationalPoint P) {
    FamilyInstance inst{t, s, m, std::move(b), std::move(P), true, ""};
    const MordellCurve curve(inst.b);
    if (!contains(curve, inst.point)) {
        throw domain_error("family: generated point is off the curve (internal error)");
    }
    return inst;
}

void check(FamilyInstance& inst, bool ok, const std::string& why) {
    if (ok) return;
    inst.usable = false;
    if (!inst.note.empty()) inst.note += "; ";
    inst.note += why;
}

// Nearest integer to 12 m^3 / (3 + 2 sqrt(3)) = 8 sqrt(3) m^3 - 12 m^3,
// computed exactly. The argument is irrational, so no tie can occur.
Int nearest_lang2_shift(const Int& m) {
    const Int q = 8 * m * m * m;
    const Int a = 3 * q * q;
    Int t;
    mpz_sqrt(t.get_mpz_t(), a.get_mpz_t());
    // nearest integer to sqrt(a): t if (2t+1)^2 > 4a, else t+1
    const Int lhs = (2 * t + 1) * (2 * t + 1);
    const Int root_nearest = lhs > 4 * a ? t : Int(t + 1);
    return root_nearest - 12 * m * m * m;
}

FamilyInstance lang1(FamilySign s, const Int& m) {
    if (s == FamilySign::Pos) {
        const Int b = 46656 * m * m + 46656 * m + 13392;
        return make(TheoremId::Lang1, s, m, b, RationalPoint(Int(-12), Int(54 * (4 * m + 2))));
    }
    const Int b = -46656 * m * m * m - 93312 * m * m - 62208 * m - 2160;
    return make(TheoremId::Lang1, s, m, b, RationalPoint(Int(36 * m + 24), Int(108)));
}

FamilyInstance lang2(FamilySign s, const Int& m) {
    if (s == FamilySign::Pos) {
        const Int k = 6 * m + 1;
        const Int b = 432 * (162 * m + 31) * k * k * k;
        return make(TheoremId::Lang2, s, m, b, RationalPoint(Int(-72 * m - 12), Int(108 * k * k)));
    }
    const Int b2 = nearest_lang2_shift(m);
    const Int w = 12 * m * m * m - b2;
    const Int b = -432 * w * w * w * (3 * b2 - 4 * m * m * m);
    auto inst = make(TheoremId::Lang2, s, m, b, RationalPoint(Int(24 * m * w), Int(36 * w * w)));
    check(inst, mpz_odd_p(m.get_mpz_t()) != 0, "parameter must be odd");
    check(inst, gcd(m, b2) == 1, "parameter and nearest-integer shift are not coprime");
    check(inst, ord_p(b, 2) < 6, "2^6 | b");
    check(inst, ord_p(b, 3) < 6, "3^6 | b");
    return inst;
}

// The cited y-coordinate 324(2m+1)b2 is off the curve by a factor 3;
// the on-curve value is 108(2m+1)b2, which the identity
// x^3 + b = 11664 (2m+1)^2 b2^2 forces.
FamilyInstance lang3(FamilySign s, const Int& m) {
    if (s == FamilySign::Pos) {
        const Int b2 = 24 * m * m + 24 * m + 5;
        const Int b = 216 * (b2 + 9) * b2 * b2;
        return make(TheoremId::Lang3, s, m, b, RationalPoint(Int(12 * b2), Int(108 * (2 * m + 1) * b2)));
    }
    const Int b2 = 36 * m * m + 36 * m + 11;
    const Int b = -432 * (b2 + 6) * b2 * b2;
    return make(TheoremId::Lang3, s, m, b, RationalPoint(Int(12 * b2), Int(108 * (2 * m + 1) * b2)));
}

FamilyInstance lang4(FamilySign s, const Int& k) {
    const Int b1 = 54 * k - 1;
    const Int b2 = s == FamilySign::Neg ? Int(720 * k - 1) : Int(720 * k + 1);
    const Int b3 = s == FamilySign::Neg ? Int(942 * k - 1) : Int(978 * k + 1);
    Int b = 432 * b1 * b2 * b2 * b3 * b3 * b3;
    if (s == FamilySign::Neg) b = -b;
    auto inst =
        make(TheoremId::Lang4, s, k, b, RationalPoint(Int(12 * b2 * b3), Int(36 * b2 * b3 * b3)));
    check(inst, gcd(b1, b2) == 1 && gcd(b1, b3) == 1 && gcd(b2, b3) == 1,
          "b1, b2, b3 are not pairwise coprime");
    check(inst, is_squarefree(b1), "b1 is not square-free");
    check(inst, is_cubefree(b2), "b2 is not cube-free");
    check(inst, is_squarefree(b3), "b3 is not square-free");
    return inst;
}

}  // namespace

FamilyInstance height_diff_family(FamilySign sign, DiffBoundSide side, const Int& m) {
    if (m < 1) throw domain_error("family: parameter must be >= 1");
    if (side == DiffBoundSide::Upper) {
        if (sign == FamilySign::Neg) {
            const Int b1 = 2160 * m * m + 1350 * m + 211;
            const Int b = -13500 * b1 * b1;  // -2^2 3^3 5^3 b1^2
            auto inst = make(TheoremId::HeightDiff, sign, m, b,
                             RationalPoint(Int(60 * b1), Int(1350 * b1 * (16 * m + 5))));
            check(inst, is_cubefree(b1), "b1 is not cube-free");
            return inst;
        }
        const Int b1 = (6 * m + 11) * (12 * m + 23);
        auto inst = make(TheoremId::HeightDiff, sign, m, Int(b1 * b1),
                         RationalPoint(Int(2 * b1), Int(3 * b1 * (8 * m + 15))));
        check(inst, is_cubefree(b1), "b1 is not cube-free");
        return inst;
    }
    if (sign == FamilySign::Pos) {
        const Int t = 3 * m + 1;
        return make(TheoremId::HeightDiff, sign, m, Int(t * t + 1), RationalPoint(Int(-1), t));
    }
    const Int t = 2 * m + 1;
    return make(TheoremId::HeightDiff, sign, m, Int(1 - t * t * t), RationalPoint(t, Int(1)));
}

FamilyInstance family(TheoremId theorem, FamilySign sign, const Int& parameter) {
    if (parameter < 1) throw domain_error("family: parameter must be >= 1");
    switch (theorem) {
        case TheoremId::Lang1: return lang1(sign, parameter);
        case TheoremId::Lang2: return lang2(sign, parameter);
        case TheoremId::Lang3: return lang3(sign, parameter);
        case TheoremId::Lang4: return lang4(sign, parameter);
        case TheoremId::HeightDiff:
            return height_diff_family(sign, DiffBoundSide::Upper, parameter);
    }
    throw domain_error("family: unknown theorem");
}

}  // namespace mordell
