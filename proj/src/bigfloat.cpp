#include "wzs/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace wzs {

BigFloat BigFloat::parse(const std::string& s, long prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && !r.is_finite())
        throw DomainError("unparsable number: " + s);
    return r;
}

std::string BigFloat::str(size_t digits) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // mantissa is 0.m * 10^e; print as d.ddd e(e-1)
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

std::string BigFloat::str() const {
    const size_t digits = static_cast<size_t>(prec() * 0.30103) + 3;
    return str(digits);
}

static long min_prec(const BigFloat& a, const BigFloat& b) {
    return std::min(a.prec(), b.prec());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return add(a, b, min_prec(a, b)); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return sub(a, b, min_prec(a, b)); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return mul(a, b, min_prec(a, b)); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return div(a, b, min_prec(a, b)); }

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, long c) {
    BigFloat r(a.prec());
    mpfr_mul_si(r.v_, a.v_, c, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, long c) {
    if (c == 0) throw DomainError("division by zero");
    BigFloat r(a.prec());
    mpfr_div_si(r.v_, a.v_, c, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, long c) {
    BigFloat r(a.prec());
    mpfr_add_si(r.v_, a.v_, c, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, long c) {
    BigFloat r(a.prec());
    mpfr_sub_si(r.v_, a.v_, c, MPFR_RNDN);
    return r;
}

BigFloat add(const BigFloat& a, const BigFloat& b, long prec) {
    BigFloat r(prec);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat sub(const BigFloat& a, const BigFloat& b, long prec) {
    BigFloat r(prec);
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, long prec) {
    BigFloat r(prec);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat div(const BigFloat& a, const BigFloat& b, long prec) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigFloat r(prec);
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x, long prec) {
    if (x.is_negative()) throw DomainError("sqrt of a negative value");
    BigFloat r(prec);
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& e, long prec) {
    if (base.sgn() <= 0 && !e.is_integer())
        throw DomainError("pow with non-positive base and non-integer exponent");
    BigFloat r(prec);
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

BigFloat exp(const BigFloat& x, long prec) {
    BigFloat r(prec);
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat ln(const BigFloat& x, long prec) {
    if (x.sgn() <= 0) throw DomainError("ln of a non-positive value");
    BigFloat r(prec);
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

// Reduces x to j + t with integer j and |t| <= 1/2 (both exact), so the
// trig evaluation never sees a poorly conditioned argument: near half-integer
// x the computation routes through sin(pi*u) with u = 1/2 - |t| exact.
static void split_half(const BigFloat& x, long wp, long& j_parity, BigFloat& t) {
    BigFloat r(std::max(x.prec(), wp) + 8);
    BigFloat two = BigFloat::of(2, 16);
    mpfr_fmod(r.raw(), x.raw(), two.raw(), MPFR_RNDN); // exact: quotient digits only are discarded
    BigFloat j(32);
    mpfr_round(j.raw(), r.raw());
    long ji = j.to_long(); // in [-2, 2]
    t = BigFloat(r.prec());
    mpfr_sub(t.raw(), r.raw(), j.raw(), MPFR_RNDN); // exact
    j_parity = ((ji % 2) + 2) % 2;
}

BigFloat cos_pi(const BigFloat& x, long prec) {
    const long wp = guarded(prec) + 16;
    long parity;
    BigFloat t(wp);
    split_half(x, wp, parity, t);
    BigFloat pi_wp(wp);
    mpfr_const_pi(pi_wp.raw(), MPFR_RNDN);
    BigFloat c(wp);
    BigFloat at = abs(t);
    if (mpfr_cmp_d(at.raw(), 0.25) <= 0) {
        mpfr_mul(c.raw(), pi_wp.raw(), t.raw(), MPFR_RNDN);
        mpfr_cos(c.raw(), c.raw(), MPFR_RNDN);
    } else {
        BigFloat u(wp);
        mpfr_d_sub(u.raw(), 0.5, at.raw(), MPFR_RNDN); // exact
        mpfr_mul(c.raw(), pi_wp.raw(), u.raw(), MPFR_RNDN);
        mpfr_sin(c.raw(), c.raw(), MPFR_RNDN);
    }
    if (parity != 0) mpfr_neg(c.raw(), c.raw(), MPFR_RNDN);
    return c.round_to(prec);
}

BigFloat sin_pi(const BigFloat& x, long prec) {
    const long wp = guarded(prec) + 16;
    long parity;
    BigFloat t(wp);
    split_half(x, wp, parity, t);
    BigFloat pi_wp(wp);
    mpfr_const_pi(pi_wp.raw(), MPFR_RNDN);
    BigFloat s(wp);
    BigFloat at = abs(t);
    if (mpfr_cmp_d(at.raw(), 0.25) <= 0) {
        mpfr_mul(s.raw(), pi_wp.raw(), t.raw(), MPFR_RNDN);
        mpfr_sin(s.raw(), s.raw(), MPFR_RNDN);
    } else {
        BigFloat u(wp);
        mpfr_d_sub(u.raw(), 0.5, at.raw(), MPFR_RNDN); // exact
        mpfr_mul(s.raw(), pi_wp.raw(), u.raw(), MPFR_RNDN);
        mpfr_cos(s.raw(), s.raw(), MPFR_RNDN);
        if (t.is_negative()) mpfr_neg(s.raw(), s.raw(), MPFR_RNDN);
    }
    if (parity != 0) mpfr_neg(s.raw(), s.raw(), MPFR_RNDN);
    return s.round_to(prec);
}

BigFloat lngamma(const BigFloat& x, long prec) {
    if (x.sgn() <= 0) {
        if (x.is_integer()) throw PoleError("lngamma at a non-positive integer");
        throw DomainError("lngamma requires x > 0; use lngamma_signed");
    }
    BigFloat r(prec);
    mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

std::pair<BigFloat, int> lngamma_signed(const BigFloat& x, long prec) {
    if (x.sgn() <= 0 && x.is_integer()) throw PoleError("gamma pole at a non-positive integer");
    BigFloat r(prec);
    int sign = 0;
    mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
    return {std::move(r), sign};
}

BigFloat gamma_fn(const BigFloat& x, long prec) {
    if (x.sgn() <= 0 && x.is_integer()) throw PoleError("gamma pole at a non-positive integer");
    const long wp = guarded(prec);
    if (x.sgn() > 0) {
        BigFloat r(wp);
        mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
        return r.round_to(prec);
    }
    // Reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x)).
    BigFloat pi_wp(wp);
    mpfr_const_pi(pi_wp.raw(), MPFR_RNDN);
    BigFloat one_minus = BigFloat::of(1, wp) - x.round_to(wp);
    BigFloat g(wp);
    mpfr_gamma(g.raw(), one_minus.raw(), MPFR_RNDN);
    BigFloat s = sin_pi(x, wp);
    return div(pi_wp, mul(s, g, wp), prec);
}

BigFloat ulp(const BigFloat& x) {
    BigFloat r(x.prec());
    if (x.is_zero()) {
        mpfr_set_zero(r.raw(), 1);
        return r;
    }
    mpfr_set_ui_2exp(r.raw(), 1, x.exponent() - x.prec(), MPFR_RNDN);
    return r;
}

} // namespace wzs
