#include "mordell/local_heights.hpp"

#include <optional>

namespace mordell {

namespace {

long mod_l(const Int& b, long m) {
    Int r = b % m;
    if (r < 0) r += m;
    return r.get_si();
}

// ord_p(x) > 0 with the convention ord(0) = +infinity.
bool ord_positive(const Rat& x, const Int& p) {
    if (x == 0) return true;
    return ord_p_rational(x, p) > 0;
}

void require_affine(const RationalPoint& P) {
    if (P.is_infinity()) throw domain_error("local height of the point at infinity");
}

// 1/2 log max{1,|x|_p} expressed as a coefficient of log p.
Rat half_log_max_coeff(const Rat& x, const Int& p) {
    if (x == 0) return Rat(0);
    const long o = ord_p_rational(x, p);
    if (o >= 0) return Rat(0);
    return Rat(-o) / 2;
}

}  // namespace

NonArchLocalHeight local_height_p(const Int& b, const RationalPoint& P, const Int& p) {
    require_affine(P);
    if (p <= 3) throw domain_error("local_height_p: p must be > 3");
    const unsigned long e = ord_p(b, p);
    if (e >= 6) throw domain_error("local_height_p: p^6 | b");

    LogCombination v;
    v.add(p, half_log_max_coeff(P.x(), p));
    // -1/12 log|Delta|_p = (ord_p(Delta)/12) log p, ord_p(Delta) = 2 ord_p(b).
    v.add(p, Rat(2 * static_cast<long>(e)) / 12);

    std::string which = "none";
    if (ord_positive(P.x(), p)) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        const Int r = b / pe;
        if (e == 2 && is_quadratic_residue(r, p)) {
            v.add(p, Rat(-1, 3));
            which = "ord=2, quadratic residue";
        } else if (e == 3 && is_cubic_residue(-r, p)) {
            v.add(p, Rat(-1, 2));
            which = "ord=3, cubic residue";
        } else if (e == 4 && is_quadratic_residue(r, p)) {
            v.add(p, Rat(-2, 3));
            which = "ord=4, quadratic residue";
        }
    }
    return {p, v, which};
}

NonArchLocalHeight local_height_3(const Int& b, const RationalPoint& P) {
    require_affine(P);
    const Int three(3);
    if (mod_l(b, 729) == 0) throw domain_error("local_height_3: 3^6 | b");

    LogCombination v;
    v.add(three, half_log_max_coeff(P.x(), three));
    v.add(three, Rat(3 + 2 * static_cast<long>(ord_p(b, three))) / 12);

    std::string which = "none";
    const long m9 = mod_l(b, 9);
    const bool x_int_at_3 = P.x() == 0 || ord_p_rational(P.x(), three) >= 0;
    if ((m9 == 1 || m9 == 8) && x_int_at_3 && ord_positive(P.x() + b, three)) {
        v.add(three, Rat(-1, 4));
        which = "b=1,8 mod 9, singular";
    } else if (ord_positive(P.x(), three)) {
        const long m27 = mod_l(b, 27);
        const long m243 = mod_l(b, 243);
        if (m27 == 9) {
            v.add(three, Rat(-1, 3));
            which = "b=9 mod 27, singular";
        } else if (m243 == 54 || m243 == 81 || m243 == 108) {
            v.add(three, Rat(-2, 3));
            which = "b=54,81,108 mod 243, singular";
        } else if (m243 == 27 || m243 == 216) {
            v.add(three, Rat(-3, 4));
            which = "b=27,216 mod 243, singular";
        }
    }
    return {three, v, which};
}

NonArchLocalHeight local_height_2(const Int& b, const RationalPoint& P) {
    require_affine(P);
    const Int two(2);
    if (mod_l(b, 64) == 0) throw domain_error("local_height_2: 2^6 | b");

    LogCombination v;
    v.add(two, half_log_max_coeff(P.x(), two));
    v.add(two, Rat(4 + 2 * static_cast<long>(ord_p(b, two))) / 12);

    std::string which = "none";
    if (ord_positive(P.x(), two)) {
        const long m64 = mod_l(b, 64);
        if (m64 % 8 == 1) {
            v.add(two, Rat(-1, 3));
            which = "b=1 mod 8, singular";
        } else if (m64 % 16 == 8 || m64 % 16 == 12) {
            v.add(two, Rat(-1, 2));
            which = "b=8,12 mod 16, singular";
        } else if (m64 % 32 == 4) {
            v.add(two, Rat(-2, 3));
            which = "b=4 mod 32, singular";
        } else if (m64 == 16) {
            // Minimal model y^2 + y = x^3 + (b-16)/64 with
            // Delta(E_b,min) = Delta(E_b)/2^12.
            v.add(two, Rat(-1));
            which = "b=16 mod 64, singular (minimal model)";
        }
    }
    return {two, v, which};
}

LogCombination local_height_sum_nonarch(const Int& b, const RationalPoint& P) {
    require_affine(P);
    const auto fb = factorize(b);
    for (const auto& f : fb) {
        if (f.exponent >= 6) throw domain_error("local_height_sum_nonarch: b not sixth-power-free");
    }

    LogCombination sum;
    sum += local_height_2(b, P).value;
    sum += local_height_3(b, P).value;
    for (const auto& f : fb) {
        if (f.prime > 3) sum += local_height_p(b, P, f.prime).value;
    }

    // Remaining places: primes dividing den(x) but not 6b contribute
    // 1/2 log max{1,|x|_p} only.
    const Int den = P.x().get_den();
    if (den > 1) {
        // Denominators of points on E_b are squares; factoring the root
        // halves the work.
        std::vector<PrimePower> dfac;
        if (auto root = integer_sqrt_exact(den)) {
            dfac = factorize(*root);
            for (auto& f : dfac) f.exponent *= 2;
        } else {
            dfac = factorize(den);
        }
        for (const auto& f : dfac) {
            if (f.prime == 2 || f.prime == 3 || mpz_divisible_p(b.get_mpz_t(), f.prime.get_mpz_t())) {
                continue;  // already covered by the case formulas
            }
            sum.add(f.prime, Rat(static_cast<long>(f.exponent)) / 2);
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Archimedean local height: Tate's series.

namespace {

struct ExactPoint {
    Rat x, y;
};

unsigned long rat_bits(const Rat& x) {
    return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) + mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

ExactPoint double_exact(const ExactPoint& Q, const Int& b) {
    (void)b;
    const Rat lambda = 3 * Q.x * Q.x / (2 * Q.y);
    const Rat x2 = lambda * lambda - 2 * Q.x;
    const Rat y2 = lambda * (Q.x - x2) - Q.y;
    return {x2, y2};
}

// x(2Q) = x (x^3 - 8b) / (4 (x^3 + b)) in floats.
Real duplicate_x(const Real& x, const Real& b8, const Real& b1, mpfr_prec_t wp) {
    const Real x3 = x * x * x;
    const Real den = (x3 + b1) * 4l;
    if (!(den > Real(wp))) {
        throw domain_error("archimedean series: duplication hit a 2-torsion abscissa");
    }
    return x * (x3 - b8) / den;
}

class SeriesEvaluator {
public:
    SeriesEvaluator(const Int& b, const ArchHeightConfig& cfg) : b_(b), cfg_(cfg) {
        if (cfg.precision_bits < 64) throw domain_error("arch_height: precision_bits must be >= 64");
        if (cfg.depth < 1) throw domain_error("arch_height: depth must be >= 1");
        wp_ = cfg.precision_bits + 8 * static_cast<mpfr_prec_t>(cfg.depth) + 32;
        branch_ = b < 0 ? ArchBranch::NegativeB : ArchBranch::PositiveBTranslated;
        bf_ = Real::of(b, wp_);
        b8_ = Real::of(Int(8 * b), wp_);
        if (branch_ == ArchBranch::PositiveBTranslated) {
            beta_ = cbrt(bf_);
            beta2_ = beta_ * beta_;
            beta3_ = bf_;
            beta4_ = beta2_ * beta2_;
        }
    }

    ArchHeightResult run(std::optional<ExactPoint> exact, Real x_float) {
        Real sum(wp_);
        const Real head = half_log_abscissa(exact ? Real::of(exact->x, wp_) : x_float);
        bool exact_tail = false;

        for (int k = 0; k < cfg_.depth; ++k) {
            const Real xk = exact ? Real::of(exact->x, wp_) : x_float;
            sum += mul_2si(log(z_factor(xk)), -2 * k);

            if (k + 1 == cfg_.depth) break;
            if (exact) {
                if (exact->y == 0) {
                    // 2^{k+1} P = O: every later z-factor is exactly 1.
                    exact_tail = true;
                    break;
                }
                if (k + 1 > cfg_.exact_depth ||
                    rat_bits(exact->x) * 4 > cfg_.exact_bit_budget) {
                    x_float = duplicate_x(xk, b8_, bf_, wp_);
                    exact.reset();
                } else {
                    exact = double_exact(*exact, b_);
                }
            } else {
                x_float = duplicate_x(x_float, b8_, bf_, wp_);
            }
        }

        Real value = head + mul_2si(sum, -3) -
                     log(Real::of(Int(432 * b_ * b_), wp_)) / 12l;

        Real tail(cfg_.precision_bits);
        if (!exact_tail) {
            if (branch_ == ArchBranch::NegativeB) {
                // 0 <= sum_{k>=K} 4^{-k} log z <= (4/3) 4^{-K} log 9.
                tail = mul_2si(log(Real::of(9l, cfg_.precision_bits)) / 6l, -2 * cfg_.depth);
            } else {
                // |sum_{k>=K} 4^{-k} log z| < 2.24 * 4^{-K}.
                tail = mul_2si(Real::of(std::string("2.24"), cfg_.precision_bits),
                               -2 * cfg_.depth - 3);
            }
        }

        Real rounded(cfg_.precision_bits);
        mpfr_set(rounded.get(), value.get(), MPFR_RNDN);
        return {rounded, tail, branch_};
    }

    mpfr_prec_t wp() const { return wp_; }

private:
    Real half_log_abscissa(const Real& x0) const {
        if (branch_ == ArchBranch::NegativeB) {
            if (!(x0 > Real(wp_))) {
                throw domain_error("arch_height: x must satisfy x >= |b|^(1/3) for b < 0");
            }
            return mul_2si(log(x0), -1);
        }
        const Real xt = x0 + mul_2si(beta_, 1);
        if (!(xt > Real(wp_))) {
            throw domain_error("arch_height: x + 2 b^(1/3) must be positive for b > 0");
        }
        return mul_2si(log(xt), -1);
    }

    Real z_factor(const Real& x) const {
        const Real slack = Real::of(1e-10, wp_);
        if (branch_ == ArchBranch::NegativeB) {
            const Real z = Real::of(1l, wp_) - b8_ / (x * x * x);
            if (z < Real::of(1l, wp_) - slack || z > Real::of(9l, wp_) + slack) {
                throw domain_error("arch_height: z-factor outside [1,9]; x below |b|^(1/3)?");
            }
            return z;
        }
        const Real t = Real::of(1l, wp_) / (x + mul_2si(beta_, 1));
        const Real t2 = t * t;
        const Real z = Real::of(1l, wp_) - 24l * beta2_ * t2 + 56l * beta3_ * t2 * t -
                       24l * beta4_ * t2 * t2;
        if (!(z > Real(wp_)) || z > Real::of(9l, wp_) + slack) {
            throw domain_error("arch_height: z-factor outside (0,9] on the translated curve");
        }
        return z;
    }

    Int b_;
    ArchHeightConfig cfg_;
    mpfr_prec_t wp_ = 0;
    ArchBranch branch_ = ArchBranch::NegativeB;
    Real bf_{64}, b8_{64}, beta_{64}, beta2_{64}, beta3_{64}, beta4_{64};
};

}  // namespace

ArchHeightResult arch_height(const Int& b, const RationalPoint& P, const ArchHeightConfig& config) {
    if (P.is_infinity()) throw domain_error("arch_height of the point at infinity");
    if (b == 0) throw domain_error("arch_height: b must be nonzero");
    SeriesEvaluator eval(b, config);
    return eval.run(ExactPoint{P.x(), P.y()}, Real(eval.wp()));
}

ArchHeightResult arch_height_real(const Int& b, const Real& x, const ArchHeightConfig& config) {
    if (b == 0) throw domain_error("arch_height_real: b must be nonzero");
    SeriesEvaluator eval(b, config);
    Real x0(eval.wp());
    mpfr_set(x0.get(), x.get(), MPFR_RNDN);
    return eval.run(std::nullopt, x0);
}

}  // namespace mordell
