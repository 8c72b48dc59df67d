#pragma once

#include <string_view>

#include "mordell/curve.hpp"

namespace mordell {

/// Kodaira types occurring for y^2 = x^3 + b (j = 0); multiplicative
/// types I_n, n >= 1 never arise and are not representable.
enum class KodairaType { I0, II, III, IV, I0star, IVstar, IIIstar, IIstar };

std::string_view to_string(KodairaType t);

struct ReductionData {
    Int prime;
    KodairaType kodaira;
    int tamagawa;

    bool operator==(const ReductionData&) const = default;
};

/// Reduction data at a prime p > 3 with p^6 not dividing b.
ReductionData reduction_at(const Int& b, const Int& p);

/// Reduction data at 3 (requires 3^6 not dividing b).
ReductionData reduction_at_3(const Int& b);

/// Reduction data at 2 (requires 2^6 not dividing b). For b = 16 mod 64
/// the type reported is that of the minimal model y^2 + y = x^3 + (b-16)/64.
ReductionData reduction_at_2(const Int& b);

/// Dispatches on p.
ReductionData reduction(const Int& b, const Int& p);

/// Whether P reduces to the singular point of E_b mod p. Always false
/// when the reduction is good (I0). Requires b sixth-power-free, P != O.
bool is_singular_mod_p(const Int& b, const RationalPoint& P, const Int& p);

enum class MinimalModelKind { ShortWeierstrass, Translated16Mod64 };

struct MinimalModel {
    MinimalModelKind kind;
    Int b1;  // sixth-power-free part of the input

    /// Constant term of the minimal equation: b1 for the short
    /// Weierstrass form, (b1-16)/64 for y^2 + y = x^3 + a6.
    Int a6() const {
        return kind == MinimalModelKind::ShortWeierstrass ? b1 : Int((b1 - 16) / 64);
    }
};

MinimalModel minimal_model(const Int& b);

}  // namespace mordell
