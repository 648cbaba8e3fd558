#pragma once

// Exact arithmetic substrate: arbitrary-size integers and canonical
// rationals on top of GMP. Rational values are always reduced, with a
// positive denominator and zero represented as 0/1 (mpq canonical form).

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "wzs/errors.hpp"

namespace wzs {

using Int = mpz_class;
using Rational = mpq_class;

// num/den reduced to canonical form. den must be nonzero.
inline Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// Parses "p", "p/q" or "-p/q".
inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("unparsable rational: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// True for arguments where the gamma function has a pole.
inline bool is_nonpositive_integer(const Rational& q) {
    return is_integer(q) && q.get_num() <= 0;
}

// Exact x! for x >= 0.
inline Int factorial(unsigned long x) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), x);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational r;
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (base == 0) throw DomainError("0 raised to a negative power");
        r = Rational(1) / r;
    }
    r.canonicalize();
    return r;
}

} // namespace wzs
