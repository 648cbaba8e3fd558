#pragma once

// Arbitrary-precision reals. Every value carries its own precision in bits;
// there is no ambient global precision, so results are reproducible and the
// type is safe to share across threads. Mixed-precision operator arithmetic
// rounds to the narrower operand; the explicit-precision free functions are
// what the numeric kernels use.

#include <mpfr.h>

#include <string>
#include <utility>

#include "wzs/errors.hpp"
#include "wzs/rational.hpp"

namespace wzs {

class BigFloat {
public:
    explicit BigFloat(long prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(long x, long prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat of(const Rational& q, long prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat of(const Int& z, long prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    // Parses a decimal string, rounding to prec bits.
    static BigFloat parse(const std::string& s, long prec);

    long prec() const { return mpfr_get_prec(v_); }
    BigFloat round_to(long prec) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sgn() const { return mpfr_sgn(v_); }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    long exponent() const { return is_zero() ? mpfr_get_emin() : mpfr_get_exp(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal string with the given number of significant digits, "d.dddEe".
    std::string str(size_t digits) const;
    // Full-precision decimal string (enough digits to round-trip).
    std::string str() const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

    // Operator arithmetic rounds to min(prec(a), prec(b)).
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    // Exact-operand arithmetic at this value's precision.
    friend BigFloat operator*(const BigFloat& a, long c);
    friend BigFloat operator*(long c, const BigFloat& a) { return a * c; }
    friend BigFloat operator/(const BigFloat& a, long c);
    friend BigFloat operator+(const BigFloat& a, long c);
    friend BigFloat operator-(const BigFloat& a, long c);

private:
    mpfr_t v_;
};

// --- explicit-precision operations (round-to-nearest; <= 2 ulp contract) ---

BigFloat add(const BigFloat& a, const BigFloat& b, long prec);
BigFloat sub(const BigFloat& a, const BigFloat& b, long prec);
BigFloat mul(const BigFloat& a, const BigFloat& b, long prec);
BigFloat div(const BigFloat& a, const BigFloat& b, long prec); // b != 0
BigFloat sqrt(const BigFloat& x, long prec);                   // x >= 0
BigFloat pow(const BigFloat& base, const BigFloat& e, long prec); // base > 0, or integer e
BigFloat abs(const BigFloat& x);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);

// --- elementary functions (<= 4 ulp contract) ---

BigFloat exp(const BigFloat& x, long prec);
BigFloat ln(const BigFloat& x, long prec); // x > 0
// cos(pi*x) with exact argument reduction, accurate near half-integer x.
BigFloat cos_pi(const BigFloat& x, long prec);
// sin(pi*x), same reduction scheme.
BigFloat sin_pi(const BigFloat& x, long prec);

// --- gamma family ---

// log Gamma(x) for x > 0 (<= 8 ulp at working precision).
BigFloat lngamma(const BigFloat& x, long prec);
// Gamma(x) for any non-pole real; negative arguments go through reflection.
BigFloat gamma_fn(const BigFloat& x, long prec);
// log |Gamma(x)| and the sign of Gamma(x), defined away from poles.
std::pair<BigFloat, int> lngamma_signed(const BigFloat& x, long prec);

// One unit in the last place of x at its own precision.
BigFloat ulp(const BigFloat& x);

// Working precision with guard digits: target + max(32, target/10).
inline long guarded(long prec) { return prec + (prec / 10 > 32 ? prec / 10 : 32); }

} // namespace wzs
