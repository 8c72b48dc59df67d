#pragma once

#include <map>
#include <string>

#include "mordell/curve.hpp"
#include "mordell/reduction.hpp"

namespace mordell {

/// Exact symbolic sum of rational multiples of log p, one term per
/// prime. Kept exact so that cancellations (torsion points summing to
/// zero) are testable without tolerances.
class LogCombination {
public:
    void add(const Int& prime, const Rat& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(prime, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LogCombination& operator+=(const LogCombination& other) {
        for (const auto& [p, c] : other.terms_) add(p, c);
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Int, Rat>& terms() const { return terms_; }

    Real to_real(mpfr_prec_t prec) const {
        Real sum(prec);
        for (const auto& [p, c] : terms_) {
            sum += Real::of(c, prec) * log_int(p, prec);
        }
        return sum;
    }

    bool operator==(const LogCombination&) const = default;

private:
    std::map<Int, Rat> terms_;
};

/// A non-archimedean local height value 1/2 log max{1,|x|_p}
/// - 1/12 log|Delta|_p - correction, stored exactly.
struct NonArchLocalHeight {
    Int prime;
    LogCombination value;
    std::string correction_case;  // which case of the local formula fired
};

/// Local height at a prime p > 3 with p^6 not dividing b.
NonArchLocalHeight local_height_p(const Int& b, const RationalPoint& P, const Int& p);

/// Local height at 3 (3^6 must not divide b).
NonArchLocalHeight local_height_3(const Int& b, const RationalPoint& P);

/// Local height at 2 (2^6 must not divide b). The b = 16 mod 64 case
/// uses the minimal model y^2 + y = x^3 + (b-16)/64, whose discriminant
/// is Delta(E_b)/2^12.
NonArchLocalHeight local_height_2(const Int& b, const RationalPoint& P);

/// Sum of the local heights over all finite places. Covers the primes
/// dividing 6b through the case formulas and every other prime dividing
/// the denominator of x(P) through 1/2 log max{1,|x|_p}.
LogCombination local_height_sum_nonarch(const Int& b, const RationalPoint& P);

struct ArchHeightConfig {
    mpfr_prec_t precision_bits = 256;
    int depth = 40;  // series truncation index K
    // The duplication orbit is tracked in exact rationals up to
    // exact_depth steps, stopping early once coordinate sizes pass
    // exact_bit_budget; after that a high-precision float iteration of
    // x -> (x^4 - 8bx) / (4(x^3 + b)) takes over.
    int exact_depth = 10;
    unsigned long exact_bit_budget = 1ul << 20;
};

enum class ArchBranch { NegativeB, PositiveBTranslated };

struct ArchHeightResult {
    Real value;
    Real tail_bound;  // rigorous bound on the series truncation error
    ArchBranch branch;
};

/// Archimedean local height via Tate's series. For b < 0 the series is
/// evaluated directly (z = 1 - 8b t^3, z in [1,9]); for b > 0 on the
/// translated curve x' = x + 2 b^(1/3), which keeps x' >= b^(1/3) > 0.
ArchHeightResult arch_height(const Int& b, const RationalPoint& P, const ArchHeightConfig& config = {});

/// Same series for a real point given by its abscissa only (the series
/// never needs y). Requires x^3 + b >= 0.
ArchHeightResult arch_height_real(const Int& b, const Real& x, const ArchHeightConfig& config = {});

}  // namespace mordell
