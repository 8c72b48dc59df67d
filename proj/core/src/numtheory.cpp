#include "mordell/numtheory.hpp"

#include <algorithm>

namespace mordell {

namespace {

constexpr unsigned long kTrialLimit = 100000;  // trial division covers n <= 1e10

// Deterministic Pollard-Brent rho; n must be odd, composite, not a prime
// power handled elsewhere. Returns a nontrivial factor.
Int pollard_brent(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        Int q(1), xs, ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (d == 1) {
            xs = x;
            for (unsigned long i = 0; i < r; ++i) {
                x = (x * x + c) % n;
            }
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = x;
                const unsigned long chunk = std::min(m, r - k);
                for (unsigned long i = 0; i < chunk; ++i) {
                    x = (x * x + c) % n;
                    q = q * abs(x - xs) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += chunk;
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one squaring at a time.
            d = 1;
            x = ys;
            while (d == 1) {
                x = (x * x + c) % n;
                mpz_gcd(d.get_mpz_t(), Int(abs(x - xs)).get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
        // Rare cycle degeneracy; retry with the next increment.
    }
}

void factor_into(const Int& n, std::vector<PrimePower>& out);

void split_composite(const Int& n, std::vector<PrimePower>& out) {
    if (is_prime(n)) {
        out.push_back({n, 1});
        return;
    }
    const Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

void factor_into(const Int& n, std::vector<PrimePower>& out) {
    if (n == 1) return;
    split_composite(n, out);
}

}  // namespace

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned long ord_p(const Int& n, const Int& p) {
    if (n == 0) throw domain_error("ord_p: n must be nonzero");
    if (!is_prime(p)) throw domain_error("ord_p: p must be prime");
    Int dummy;
    return mpz_remove(dummy.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

long ord_p_rational(const Rat& x, const Int& p) {
    if (x == 0) throw domain_error("ord_p_rational: x must be nonzero");
    return static_cast<long>(ord_p(x.get_num(), p)) -
           static_cast<long>(ord_p(x.get_den(), p));
}

SixthPowerDecomposition sixth_power_free(const Int& b) {
    if (b == 0) throw domain_error("sixth_power_free: b must be nonzero");
    Int u(1), b1 = b;
    for (const auto& [p, e] : factorize(b)) {
        if (e < 6) continue;
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 6);
        u *= pk;
        mpz_pow_ui(pk.get_mpz_t(), pk.get_mpz_t(), 6);
        b1 /= pk;
    }
    return {b1, u};
}

bool is_quadratic_residue(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p)) throw domain_error("is_quadratic_residue: p must be an odd prime");
    if (a % p == 0) throw domain_error("is_quadratic_residue: p | a");
    Int r;
    Int e = (p - 1) / 2;
    mpz_powm(r.get_mpz_t(), Int(a % p + p).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r == 1;
}

bool is_cubic_residue(const Int& a, const Int& p) {
    if (p <= 3 || !is_prime(p)) throw domain_error("is_cubic_residue: p must be a prime > 3");
    if (a % p == 0) throw domain_error("is_cubic_residue: p | a");
    if (p % 3 == 2) return true;  // cubing is a bijection mod p
    Int r;
    Int e = (p - 1) / 3;
    mpz_powm(r.get_mpz_t(), Int(a % p + p).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r == 1;
}

std::optional<Int> integer_sqrt_exact(const Int& n) {
    if (n < 0) throw domain_error("integer_sqrt_exact: n must be nonnegative");
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

std::vector<PrimePower> factorize(const Int& n) {
    if (n == 0) throw domain_error("factorize: n must be nonzero");
    std::vector<PrimePower> out;
    Int m = abs(n);
    if (m == 1) return out;

    for (unsigned long d : {2ul, 3ul, 5ul}) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            m /= d;
            ++e;
        }
        if (e) out.push_back({Int(d), e});
    }
    // 6k +- 1 wheel.
    for (unsigned long d = 7; d <= kTrialLimit && m > 1; d += 6) {
        for (unsigned long q : {d, d + 4}) {
            if (Int(q) * q > m) break;
            unsigned long e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
                m /= q;
                ++e;
            }
            if (e) out.push_back({Int(q), e});
        }
    }
    if (m > 1) {
        if (Int(kTrialLimit) * kTrialLimit > m) {
            out.push_back({m, 1});  // below the square of the trial bound, so prime
        } else {
            std::vector<PrimePower> rest;
            factor_into(m, rest);
            std::sort(rest.begin(), rest.end(),
                      [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
            for (auto& pp : rest) {
                if (!out.empty() && out.back().prime == pp.prime) {
                    out.back().exponent += pp.exponent;
                } else {
                    out.push_back(std::move(pp));
                }
            }
        }
    }
    return out;
}

bool is_squarefree(const Int& n) {
    const auto fs = factorize(n);
    return std::all_of(fs.begin(), fs.end(), [](const PrimePower& f) { return f.exponent < 2; });
}

bool is_cubefree(const Int& n) {
    const auto fs = factorize(n);
    return std::all_of(fs.begin(), fs.end(), [](const PrimePower& f) { return f.exponent < 3; });
}

}  // namespace mordell
