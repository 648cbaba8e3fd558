#pragma once

// Bivariate polynomials over Q with a dense exponent-map representation.
// The two variables are called n and k after their primary role in
// certificate algebra; series weights reuse the same type as (n, a).
//
// Invariants: no stored coefficient is zero; equality is term-map equality.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wzs/rational.hpp"

namespace wzs {

class BiPoly {
public:
    // (deg_n, deg_k) -> coefficient
    using TermMap = std::map<std::pair<int, int>, Rational>;

    BiPoly() = default;
    explicit BiPoly(const Rational& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    BiPoly(long c) : BiPoly(Rational(c)) {}

    static BiPoly var_n() { return monomial(rat(1), 1, 0); }
    static BiPoly var_k() { return monomial(rat(1), 0, 1); }
    static BiPoly monomial(const Rational& c, int deg_n, int deg_k);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    int deg_n() const;
    int deg_k() const;
    int total_degree() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);

    friend BiPoly operator*(const Rational& c, const BiPoly& p) { return BiPoly(c) * p; }
    friend BiPoly operator*(const BiPoly& p, const Rational& c) { return BiPoly(c) * p; }

    bool operator==(const BiPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

    BiPoly pow(unsigned e) const;

    // Substitutes n -> n + dn, k -> k + dk for integer shifts.
    BiPoly shifted(int dn, int dk) const;

    Rational eval(const Rational& n, const Rational& k) const;

    // Largest exponent pair in map order, for deterministic normalization.
    std::pair<int, int> leading_exponent() const; // requires !is_zero()
    const Rational& leading_coeff() const;        // requires !is_zero()

    // e.g. "4*n^2 + 4*n + 1"; "0" for the zero polynomial.
    std::string str(const char* vn = "n", const char* vk = "k") const;

private:
    void add_term(int dn, int dk, const Rational& c);
    TermMap terms_;
};

// Terse builders for transcribing printed polynomial multipliers.
inline BiPoly operator*(long c, const BiPoly& p) { return Rational(c) * p; }
inline BiPoly operator+(const BiPoly& p, long c) { return p + BiPoly(c); }
inline BiPoly operator+(long c, const BiPoly& p) { return p + BiPoly(c); }
inline BiPoly operator-(const BiPoly& p, long c) { return p - BiPoly(c); }
inline BiPoly operator-(long c, const BiPoly& p) { return BiPoly(c) - p; }

} // namespace wzs
