#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mordell/real.hpp"

namespace mordell {

/// Thrown when an operation is called outside its domain (zero input,
/// composite modulus, point off the curve, ...).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(const Int& n);

/// Largest e with p^e | n. Throws on n == 0 or composite p.
unsigned long ord_p(const Int& n, const Int& p);

/// ord_p extended to nonzero rationals: ord(num) - ord(den).
long ord_p_rational(const Rat& x, const Int& p);

struct SixthPowerDecomposition {
    Int b1;  // sixth-power-free part, same sign as the input
    Int u;   // positive; input == u^6 * b1

    bool operator==(const SixthPowerDecomposition&) const = default;
};

SixthPowerDecomposition sixth_power_free(const Int& b);

inline bool is_sixth_power_free(const Int& b) { return sixth_power_free(b).u == 1; }

/// Euler criterion. Requires p an odd prime not dividing a.
bool is_quadratic_residue(const Int& a, const Int& p);

/// True iff x^3 = a (mod p) is solvable. Requires p > 3 prime, p not
/// dividing a. For p = 2 (mod 3) cubing is a bijection, so always true.
bool is_cubic_residue(const Int& a, const Int& p);

/// Exact integer square root: s with s^2 == n, if n is a perfect square.
std::optional<Int> integer_sqrt_exact(const Int& n);

struct PrimePower {
    Int prime;
    unsigned long exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Full factorization of |n|, sorted by prime. Trial division with
/// Pollard-Brent rho for cofactors beyond the trial range. Deterministic.
std::vector<PrimePower> factorize(const Int& n);

bool is_squarefree(const Int& n);
bool is_cubefree(const Int& n);

}  // namespace mordell
