#include "wzs/hyperterm.hpp"

#include <cmath>
#include <cstdlib>

namespace wzs {

HyperTerm::HyperTerm(Rational const_factor, Rational base_n, Rational base_k,
                     std::vector<GammaFactor> gammas)
    : const_factor_(std::move(const_factor)),
      base_n_(std::move(base_n)),
      base_k_(std::move(base_k)),
      gammas_(std::move(gammas)) {
    if (base_n_ == 0 || base_k_ == 0) throw DomainError("hypergeometric term with zero base");
}

HyperTerm& HyperTerm::fact(int c_n, int c_k, const Rational& off, int e) {
    if (e == 0) throw DomainError("gamma factor with zero exponent");
    if (c_n == 0 && c_k == 0) throw DomainError("gamma factor constant in (n,k)");
    GammaFactor g;
    g.alpha = c_n;
    g.beta = c_k;
    g.offset = off + 1; // x! = Gamma(x + 1)
    g.exponent = e;
    const Rational den(g.offset.get_den());
    if (den != 1 && den != 2) throw DomainError("gamma offset must be integer or half-integer");
    gammas_.push_back(g);
    return *this;
}

bool HyperTerm::operator==(const HyperTerm& o) const {
    if (const_factor_ != o.const_factor_ || base_n_ != o.base_n_ || base_k_ != o.base_k_ ||
        gammas_.size() != o.gammas_.size())
        return false;
    for (size_t i = 0; i < gammas_.size(); ++i) {
        const auto& a = gammas_[i];
        const auto& b = o.gammas_[i];
        if (a.alpha != b.alpha || a.beta != b.beta || a.offset != b.offset ||
            a.exponent != b.exponent)
            return false;
    }
    return true;
}

RatFunc HyperTerm::shift_ratio(Direction d) const {
    const BiPoly n = BiPoly::var_n();
    const BiPoly k = BiPoly::var_k();
    BiPoly num(1), den(1);
    for (const auto& g : gammas_) {
        const int s = d == Direction::N ? g.alpha : g.beta;
        if (s == 0) continue;
        BiPoly arg = g.alpha * n + g.beta * k + BiPoly(g.offset);
        BiPoly prod(1);
        if (s > 0) {
            // Gamma(A+s)/Gamma(A) = A (A+1) ... (A+s-1)
            for (int i = 0; i < s; ++i) prod = prod * (arg + i);
        } else {
            // Gamma(A-s')/Gamma(A) = 1 / ((A-1) ... (A-s'))
            for (int i = 1; i <= -s; ++i) prod = prod * (arg - i);
        }
        const bool to_num = (s > 0) == (g.exponent > 0);
        const unsigned e = static_cast<unsigned>(std::abs(g.exponent));
        if (to_num)
            num = num * prod.pow(e);
        else
            den = den * prod.pow(e);
    }
    const Rational& base = d == Direction::N ? base_n_ : base_k_;
    return RatFunc(base * num, den);
}

Rational half_gamma_rational(long m) {
    // Gamma(m + 1/2) / sqrt(pi)
    if (m >= 0) {
        const auto um = static_cast<unsigned long>(m);
        return rat(factorial(2 * um), factorial(um) * pow_rat(rat(4), m).get_num());
    }
    const auto um = static_cast<unsigned long>(-m);
    Rational r = rat(pow_rat(rat(-4), -m).get_num() * factorial(um), factorial(2 * um));
    return r;
}

Rational HyperTerm::eval_exact(long n, long k) const {
    Rational v = const_factor_ * pow_rat(base_n_, n) * pow_rat(base_k_, k);
    long sqrt_pi_exp = 0;
    for (const auto& g : gammas_) {
        const Rational arg = Rational(g.alpha) * n + Rational(g.beta) * k + g.offset;
        Rational gv;
        if (is_integer(arg)) {
            const long m = static_cast<long>(arg.get_num().get_si());
            if (m <= 0) {
                if (g.exponent > 0)
                    throw PoleError("gamma pole in hypergeometric term at integer point");
                return Rational(0); // pole in the denominator annihilates the term
            }
            gv = Rational(factorial(static_cast<unsigned long>(m - 1)));
        } else {
            // arg = m + 1/2
            const Rational m2 = arg - rat(1, 2);
            const long m = static_cast<long>(m2.get_num().get_si());
            gv = half_gamma_rational(m);
            sqrt_pi_exp += g.exponent;
        }
        v *= pow_rat(gv, g.exponent);
    }
    if (sqrt_pi_exp != 0)
        throw DomainError("term value is not rational: unbalanced half-integer gamma factors");
    return v;
}

BigFloat HyperTerm::eval_real(long n_index, const BigFloat& shift, long k, long prec) const {
    // First pass in double to size the log magnitudes, then a guarded pass.
    const double a_d = shift.to_double();
    double log_mag = 0;
    for (const auto& g : gammas_) {
        const double arg = g.alpha * (n_index + a_d) + g.beta * k +
                           g.offset.get_d();
        if (arg > 0 || arg != std::floor(arg))
            log_mag += std::abs(g.exponent * std::lgamma(arg));
    }
    log_mag += std::abs((n_index + a_d) * std::log(std::abs(base_n_.get_d()))) +
               std::abs(k * std::log(std::abs(base_k_.get_d())));
    const long wp = guarded(prec) + 32 + static_cast<long>(std::log2(log_mag + 4));

    const BigFloat nn = shift + n_index; // exact for integer n_index
    BigFloat logsum(wp);
    int sign = const_factor_ < 0 ? -1 : 1;
    if (base_n_ < 0 && (n_index & 1L)) sign = -sign;
    if (base_k_ < 0 && (k & 1L)) sign = -sign;
    for (const auto& g : gammas_) {
        BigFloat arg = mul(nn, BigFloat::of(g.alpha, wp), wp);
        arg = add(arg, BigFloat::of(Rational(g.beta) * k + g.offset, wp), wp);
        if (arg.sgn() <= 0 && arg.is_integer())
            throw PoleError("gamma pole at shifted argument");
        auto [lg, gsign] = lngamma_signed(arg, wp);
        logsum = add(logsum, lg * g.exponent, wp);
        if (gsign < 0 && (g.exponent & 1)) sign = -sign;
    }
    const Rational abs_bn = base_n_ < 0 ? Rational(-base_n_) : base_n_;
    const Rational abs_bk = base_k_ < 0 ? Rational(-base_k_) : base_k_;
    logsum = add(logsum, mul(nn, ln(BigFloat::of(abs_bn, wp), wp), wp), wp);
    if (k != 0) logsum = add(logsum, ln(BigFloat::of(abs_bk, wp), wp) * k, wp);
    BigFloat v = exp(logsum, wp);
    const Rational abs_c = const_factor_ < 0 ? Rational(-const_factor_) : const_factor_;
    v = mul(v, BigFloat::of(abs_c, wp), wp);
    if (sign < 0) v = -v;
    return v.round_to(prec);
}

Rational HyperTerm::ratio_limit(Direction d) const {
    long coeff_sum = 0;
    Rational lim = d == Direction::N ? base_n_ : base_k_;
    if (lim < 0) lim = -lim;
    for (const auto& g : gammas_) {
        const int s = d == Direction::N ? g.alpha : g.beta;
        if (s == 0) continue;
        coeff_sum += static_cast<long>(s) * g.exponent;
        lim *= pow_rat(rat(std::abs(s)), static_cast<long>(s) * g.exponent);
    }
    if (coeff_sum != 0)
        throw DomainError("shift ratio has no finite nonzero limit");
    return lim;
}

} // namespace wzs
