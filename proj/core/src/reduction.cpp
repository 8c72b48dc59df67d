#include "mordell/reduction.hpp"

namespace mordell {

std::string_view to_string(KodairaType t) {
    switch (t) {
        case KodairaType::I0: return "I0";
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::I0star: return "I0*";
        case KodairaType::IVstar: return "IV*";
        case KodairaType::IIIstar: return "III*";
        case KodairaType::IIstar: return "II*";
    }
    return "?";
}

namespace {

Int mod(const Int& b, long m) {
    Int r = b % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

ReductionData reduction_at(const Int& b, const Int& p) {
    if (p <= 3) throw domain_error("reduction_at: p must be > 3");
    if (!is_prime(p)) throw domain_error("reduction_at: p must be prime");
    const unsigned long e = ord_p(b, p);
    if (e >= 6) throw domain_error("reduction_at: p^6 | b; reduce the curve first");
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    const Int r = b / pe;  // unit part of b at p
    switch (e) {
        case 0: return {p, KodairaType::I0, 1};
        case 1: return {p, KodairaType::II, 1};
        case 2: return {p, KodairaType::IV, is_quadratic_residue(r, p) ? 3 : 1};
        case 3:
            if (!is_cubic_residue(-r, p)) return {p, KodairaType::I0star, 1};
            return {p, KodairaType::I0star, p % 6 == 1 ? 4 : 2};
        case 4: return {p, KodairaType::IVstar, is_quadratic_residue(r, p) ? 3 : 1};
        case 5: return {p, KodairaType::IIstar, 1};
    }
    return {p, KodairaType::I0, 1};  // unreachable
}

ReductionData reduction_at_3(const Int& b) {
    if (mod(b, 729) == 0) throw domain_error("reduction_at_3: 3^6 | b; reduce the curve first");
    const long m9 = mod(b, 9).get_si();
    if (m9 == 1 || m9 == 8) return {3, KodairaType::III, 2};
    if (m9 != 0) return {3, KodairaType::II, 1};
    const long m27 = mod(b, 27).get_si();
    if (m27 == 9) return {3, KodairaType::IV, 3};
    if (m27 == 18) return {3, KodairaType::IV, 1};
    const long m243 = mod(b, 243).get_si();
    if (m243 == 54 || m243 == 81 || m243 == 108) return {3, KodairaType::IVstar, 3};
    if (m243 == 135 || m243 == 162 || m243 == 189) return {3, KodairaType::IVstar, 1};
    if (m243 == 27 || m243 == 216) return {3, KodairaType::IIIstar, 2};
    return {3, KodairaType::IIstar, 1};  // b = 0 mod 243 and 3^6 does not divide b
}

ReductionData reduction_at_2(const Int& b) {
    if (mod(b, 64) == 0) throw domain_error("reduction_at_2: 2^6 | b; reduce the curve first");
    const long m64 = mod(b, 64).get_si();
    if (m64 % 2 == 1) {
        if (m64 % 4 == 3) return {2, KodairaType::II, 1};
        return {2, KodairaType::IV, m64 % 8 == 1 ? 3 : 1};
    }
    if (m64 % 4 == 2) return {2, KodairaType::II, 1};
    if (m64 % 16 == 8 || m64 % 16 == 12) return {2, KodairaType::I0star, 2};
    if (m64 % 32 == 4) return {2, KodairaType::IVstar, 3};
    if (m64 % 32 == 20) return {2, KodairaType::IVstar, 1};
    if (m64 == 16) return {2, KodairaType::I0, 1};  // type of the minimal model
    return {2, KodairaType::IIstar, 1};             // 32, 48 mod 64
}

ReductionData reduction(const Int& b, const Int& p) {
    if (p == 2) return reduction_at_2(b);
    if (p == 3) return reduction_at_3(b);
    return reduction_at(b, p);
}

bool is_singular_mod_p(const Int& b, const RationalPoint& P, const Int& p) {
    if (P.is_infinity()) throw domain_error("is_singular_mod_p: P must be affine");
    if (p == 2) {
        if (P.x() == 0) return true;
        return ord_p_rational(P.x(), 2) > 0;
    }
    if (p == 3) {
        // Lemma rewrites ord_3(x^3 + b) as ord_3(x + b); non-integral x
        // at 3 reduces to the smooth point at infinity.
        if (P.x() != 0 && ord_p_rational(P.x(), 3) < 0) return false;
        const Rat s = P.x() + b;
        if (s == 0) return true;
        return ord_p_rational(s, 3) > 0;
    }
    const bool x_pos = P.x() == 0 || ord_p_rational(P.x(), p) > 0;
    if (!x_pos) return false;
    return P.y() == 0 || ord_p_rational(P.y(), p) > 0;
}

MinimalModel minimal_model(const Int& b) {
    const auto dec = sixth_power_free(b);
    Int m = dec.b1 % 64;
    if (m < 0) m += 64;
    if (m == 16) return {MinimalModelKind::Translated16Mod64, dec.b1};
    return {MinimalModelKind::ShortWeierstrass, dec.b1};
}

}  // namespace mordell
