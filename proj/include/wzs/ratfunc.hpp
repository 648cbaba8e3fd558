#pragma once

// Rational functions in (n, k) kept unreduced: equality and zero-testing go
// through cross-multiplication, never multivariate gcd. Only the scalar
// content is normalized, to keep coefficient growth in check.

#include <string>

#include "wzs/bipoly.hpp"

namespace wzs {

class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(BiPoly num, BiPoly den);
    RatFunc(const BiPoly& p) : num_(p), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(BiPoly(c)), den_(1) {}

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b); // throws DomainError if b == 0

    // Value equality via cross-multiplication.
    bool same_value(const RatFunc& rhs) const;

    // Substitutes n -> n + dn, k -> k + dk.
    RatFunc shifted(int dn, int dk) const;

    // Exact value; throws PoleError when the denominator vanishes at (n, k).
    Rational eval(const Rational& n, const Rational& k) const;

    // True when the denominator vanishes at the point.
    bool has_pole_at(const Rational& n, const Rational& k) const;

    std::string str(const char* vn = "n", const char* vk = "k") const;

private:
    void normalize_content();
    BiPoly num_, den_;
};

} // namespace wzs
