#pragma once

// Proper hypergeometric terms B(n,k): a rational constant, geometric bases
// in n and k, and a product of gamma factors Gamma(alpha*n + beta*k + gamma)^e
// with small integer alpha/beta and integer or half-integer gamma. Factorials
// are encoded via x! = Gamma(x+1). (-1)^n / (-1)^k factors are folded into
// negative bases so that shift quotients stay rational.

#include <vector>

#include "wzs/bigfloat.hpp"
#include "wzs/ratfunc.hpp"

namespace wzs {

struct GammaFactor {
    int alpha = 0;        // coefficient of n
    int beta = 0;         // coefficient of k
    Rational offset;      // integer or half-integer
    int exponent = 1;     // nonzero
};

class HyperTerm {
public:
    HyperTerm() : const_factor_(1), base_n_(1), base_k_(1) {}
    HyperTerm(Rational const_factor, Rational base_n, Rational base_k,
              std::vector<GammaFactor> gammas);

    // (c_n*n + c_k*k + off)!^e appended as Gamma(c_n*n + c_k*k + off + 1)^e.
    HyperTerm& fact(int c_n, int c_k, const Rational& off, int e);
    HyperTerm& fact(int c_n, int c_k, long off, int e) { return fact(c_n, c_k, Rational(off), e); }

    const Rational& const_factor() const { return const_factor_; }
    const Rational& base_n() const { return base_n_; }
    const Rational& base_k() const { return base_k_; }
    const std::vector<GammaFactor>& gammas() const { return gammas_; }

    bool operator==(const HyperTerm& o) const;

    // T(n+1,k)/T(n,k) resp. T(n,k+1)/T(n,k) as an exact rational function.
    enum class Direction { N, K };
    RatFunc shift_ratio(Direction d) const;

    // Exact value at an integer lattice point. Half-integer gamma factors
    // must pair up so the sqrt(pi) exponent cancels; throws DomainError if
    // not, PoleError if a numerator gamma factor hits a pole.
    Rational eval_exact(long n, long k) const;

    // Value at shifted first argument (n_index + shift, k), evaluated through
    // log-gamma; for a negative base_n the sign is taken as sign^n_index
    // (the a-dependent phase common to all terms of a shifted pair cancels
    // from every relation this engine checks).
    BigFloat eval_real(long n_index, const BigFloat& shift, long k, long prec) const;

    // Limit of |shift_ratio| along the given direction as that index grows.
    // Finite for balanced terms (sum alpha*e = 0 resp. sum beta*e = 0).
    Rational ratio_limit(Direction d) const;

private:
    Rational const_factor_;
    Rational base_n_, base_k_;
    std::vector<GammaFactor> gammas_;
};

// Gamma(m + 1/2) = half_gamma_rational(m) * sqrt(pi), exact for any integer m.
Rational half_gamma_rational(long m);

} // namespace wzs
