#include "wzs/ratfunc.hpp"

#include "wzs/errors.hpp"

namespace wzs {

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) den_ = BiPoly(1);
    normalize_content();
}

// Divides numerator and denominator by their common scalar content and makes
// the denominator's leading coefficient positive. Value-preserving; keeps
// the unreduced polynomial structure intact.
void RatFunc::normalize_content() {
    if (num_.is_zero()) return;
    Int lcm_den(1), gcd_num(0);
    auto absorb = [&](const BiPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num().get_mpz_t());
        }
    };
    absorb(num_);
    absorb(den_);
    Rational scale = rat(lcm_den, gcd_num);
    if (den_.leading_coeff() * scale < 0) scale = -scale;
    if (scale != 1) {
        num_ = scale * num_;
        den_ = scale * den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFunc::same_value(const RatFunc& rhs) const {
    return (num_ * rhs.den_ - rhs.num_ * den_).is_zero();
}

RatFunc RatFunc::shifted(int dn, int dk) const {
    return RatFunc(num_.shifted(dn, dk), den_.shifted(dn, dk));
}

Rational RatFunc::eval(const Rational& n, const Rational& k) const {
    const Rational d = den_.eval(n, k);
    if (d == 0)
        throw PoleError("rational function pole at (" + n.get_str() + ", " + k.get_str() + ")");
    return num_.eval(n, k) / d;
}

bool RatFunc::has_pole_at(const Rational& n, const Rational& k) const {
    return den_.eval(n, k) == 0;
}

std::string RatFunc::str(const char* vn, const char* vk) const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str(vn, vk);
    return "(" + num_.str(vn, vk) + ") / (" + den_.str(vn, vk) + ")";
}

} // namespace wzs
