#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace mordell {

using Int = mpz_class;
using Rat = mpq_class;

/// Arbitrary-precision real number backed by MPFR.
///
/// Every value carries its own precision; there is no global precision
/// state. Arithmetic rounds to nearest at the larger precision of the
/// two operands, so widening one input widens the whole expression.
class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_swap(v_, other.v_);
    }
    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long n, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static Real of(double d, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static Real of(const Int& n, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Rat& q, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    /// Parses a decimal string (used for the paper's decimal constants).
    static Real of(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int
    sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal string with the given number of significant digits.
    std::string str(int significant_digits = 40) const;

    friend Real operator+(const Real& a, const Real& b) {
        Real r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a) {
        Real r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& b) {
        mpfr_add(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& b) {
        mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& b) {
        mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(const Real& b) {
        mpfr_div(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }

    friend Real operator*(const Real& a, long n) {
        Real r(a.precision());
        mpfr_mul_si(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long n, const Real& a) { return a * n; }
    friend Real operator/(const Real& a, long n) {
        Real r(a.precision());
        mpfr_div_si(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend Real log(const Real& a) {
        Real r(a.precision());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sqrt(const Real& a) {
        Real r(a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real cbrt(const Real& a) {
        Real r(a.precision());
        mpfr_cbrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real abs(const Real& a) {
        Real r(a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    /// a * 2^e, exact.
    friend Real mul_2si(const Real& a, long e) {
        Real r(a.precision());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

/// log of an exact integer, evaluated at the given precision.
inline Real log_int(const Int& n, mpfr_prec_t prec) {
    return log(Real::of(n, prec));
}

}  // namespace mordell
