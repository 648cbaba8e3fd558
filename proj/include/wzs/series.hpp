#pragma once

// Series summation: rising-factorial ratio series summed directly with a
// certified geometric tail bound when |z| < 1, and through a Levin u-transform
// cross-validated against direct summation plus an Euler-Maclaurin integral
// tail when |z| = 1 and the terms decay algebraically.

#include <functional>
#include <optional>
#include <vector>

#include "wzs/bigfloat.hpp"
#include "wzs/bipoly.hpp"

namespace wzs {

// coef*a + offset with rational coefficients.
struct AffineInA {
    Rational coef;
    Rational offset;

    AffineInA() : coef(0), offset(0) {}
    AffineInA(Rational c, Rational o) : coef(std::move(c)), offset(std::move(o)) {}

    Rational at(const Rational& a) const { return Rational(coef * a + offset); }
    BigFloat at(const BigFloat& a, long prec) const {
        return add(mul(BigFloat::of(coef, prec), a, prec), BigFloat::of(offset, prec), prec);
    }
    bool operator==(const AffineInA& o) const { return coef == o.coef && offset == o.offset; }
};

inline AffineInA aff(const Rational& coef, const Rational& offset) { return {coef, offset}; }

// term(n) = ratio_z^n * prod_i (num_i(a))_n / prod_j (den_j(a))_n * weight(n, a).
// The weight is a BiPoly whose first variable is n and second variable is a.
struct PochhammerSeries {
    std::vector<AffineInA> num_params;
    std::vector<AffineInA> den_params;
    Rational ratio_z;
    BiPoly weight{1};

    bool operator==(const PochhammerSeries& o) const {
        return num_params == o.num_params && den_params == o.den_params && ratio_z == o.ratio_z &&
               weight == o.weight;
    }

    bool is_linear() const; // |ratio_z| < 1

    // For |z| = 1: term(n) ~ n^c with c = sum num - sum den + deg_n(weight),
    // affine in a. Convergence needs c(a) < -1.
    AffineInA decay_exponent() const;

    // Nonempty description when the series cannot be evaluated at this a:
    // a denominator parameter hitting a non-positive integer, or a
    // non-convergent exponent.
    std::optional<std::string> admissibility_issue(const Rational& a) const;

    // Term at integer index, and the smooth continuation used by the
    // integral tail estimate (requires all parameters positive at a).
    BigFloat term(long n, const BigFloat& a, long wp) const;
    BigFloat term_real(const BigFloat& x, const BigFloat& a, long wp) const;
};

enum class SumMethod { Direct, Accelerated };

struct SumResult {
    BigFloat value;
    BigFloat error_estimate;
    long terms_used = 0;
    SumMethod method = SumMethod::Direct;
};

// (x)_n by the product recurrence; agrees with gamma(x+n)/gamma(x) for x > 0.
BigFloat pochhammer(const BigFloat& x, long n, long prec);

// Direct summation with a certified geometric tail bound. Requires |z| < 1.
// Throws ConvergenceError when max_terms is hit before the bound certifies.
SumResult sum_linear(const PochhammerSeries& s, const BigFloat& a, long prec, const BigFloat& tol,
                     long max_terms = 100000, long block_size = 0);

// Levin u acceleration of an algebraically convergent series, cross-validated
// against direct summation with an Euler-Maclaurin integral tail. Requires
// |z| = 1 and decay exponent < -1. `a_exact` (when available) drives the
// integral substitution power. Throws ConvergenceError when the routes
// disagree beyond tolerance.
SumResult sum_algebraic(const PochhammerSeries& s, const BigFloat& a, long prec,
                        const BigFloat& tol, long max_terms = 100000,
                        const std::optional<Rational>& a_exact = std::nullopt);

// The same dual-route machinery over externally supplied terms (used for the
// boundary-function column sums, whose terms come from shifted kernels).
// decay_s is the exact decay exponent s > 1 in term(n) ~ n^-s.
struct TermSequence {
    std::function<BigFloat(long n, long wp)> at;
    std::function<BigFloat(const BigFloat& x, long wp)> at_real; // may be empty
    Rational decay_s;
};

SumResult sum_algebraic_terms(const TermSequence& t, long prec, const BigFloat& tol,
                              long max_terms = 100000);

// Direct summation of externally supplied terms whose magnitude ratio
// eventually stays below ratio_cap < 1; certified by the observed ratio.
SumResult sum_terms_geometric(const std::function<BigFloat(long, long)>& term, double ratio_cap,
                              long prec, const BigFloat& tol, long max_terms = 100000);

// Levin u-transform estimate of sum t(0..), stopping once consecutive
// diagonal estimates stabilize below tol. Exposed for tests.
struct LevinResult {
    BigFloat value;
    BigFloat stabilization;
    long terms = 0;
};
LevinResult levin_u(const std::function<BigFloat(long, long)>& term, long wp, const BigFloat& tol,
                    long max_k);

// Nodes/weights of Gauss-Legendre quadrature on [0,1], cached per (count, prec).
const std::vector<std::pair<BigFloat, BigFloat>>& gauss_legendre_01(int count, long prec);

} // namespace wzs
