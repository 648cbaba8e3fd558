#pragma once

// Named constants at arbitrary precision. The production route computes each
// one from a rapidly convergent series with integer binary splitting; a
// second, independent route (different algorithm) backs the dual-route
// agreement tests and the `constants` CLI command.

#include "wzs/bigfloat.hpp"

namespace wzs {

enum class Constant { Pi, Ln2, Catalan, Zeta3, Sqrt2, Sqrt3 };

const char* constant_name(Constant c);

// Binary-splitting route, correct to prec bits.
BigFloat constant(Constant c, long prec);

// Independent cross-check route for the same constant.
BigFloat constant_alt(Constant c, long prec);

// ln of a positive rational (used by derivative-table closed forms).
BigFloat ln_rational(const Rational& q, long prec);

namespace detail {
// Binary splitting for sum_{n>=0} t_n with t_0 = num0/den0 and
// t_n / t_{n-1} = p(n) / q(n) given by integer-valued callbacks.
struct RatioSeries {
    Rational first_term;
    void (*ratio)(long n, Int& p, Int& q);
};
// Adds terms 1..terms-1 on top of first_term; result at prec bits.
BigFloat sum_ratio_series(const RatioSeries& s, long terms, long prec);
} // namespace detail

} // namespace wzs
