// Series engine: rising factorials, certified direct summation, and the
// accelerated route for algebraically convergent series.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wzs/constants.hpp"
#include "wzs/series.hpp"

using namespace wzs;

namespace {

const BiPoly n_var = BiPoly::var_n();
const BiPoly a_var = BiPoly::var_k(); // second weight variable is a

// Exact rational rising factorial, the oracle for pochhammer.
Rational poch_exact(const Rational& x, long n) {
    Rational r(1);
    for (long i = 0; i < n; ++i) r *= Rational(x + i);
    return r;
}

PochhammerSeries series(std::vector<AffineInA> num, std::vector<AffineInA> den, Rational z,
                        BiPoly weight = BiPoly(1)) {
    PochhammerSeries s;
    s.num_params = std::move(num);
    s.den_params = std::move(den);
    s.ratio_z = std::move(z);
    s.weight = std::move(weight);
    return s;
}

const BigFloat kTol20 = BigFloat::parse("1e-25", 64);

} // namespace

TEST_CASE("rising factorial basics") {
    const long prec = 192;
    const BigFloat half = BigFloat::of(rat(1, 2), prec);
    CHECK(abs(pochhammer(half, 3, prec) - BigFloat::of(rat(15, 8), prec)) <=
          ulp(BigFloat::of(rat(15, 8), prec)) * 4);
    CHECK(pochhammer(BigFloat::of(rat(-7, 3), prec), 0, prec) == BigFloat::of(1, prec));
}

TEST_CASE("pochhammer quotient telescopes to 1/(2n+1), exact oracle") {
    for (long n = 0; n <= 10; ++n) {
        const Rational q = Rational(poch_exact(rat(1, 2), n) / poch_exact(rat(3, 2), n));
        CHECK(q == rat(1, 2 * n + 1));
    }
}

TEST_CASE("pochhammer recurrence agrees with the gamma-ratio route") {
    const long prec = 256;
    const long wp = prec + 64; // guard digits for the log-magnitude of lngamma
    for (double xd : {0.17, 0.5, 1.0, 2.75, 4.9}) {
        const BigFloat x = BigFloat::parse(std::to_string(xd), wp);
        for (long n : {1L, 7L, 50L, 200L}) {
            const BigFloat lhs = pochhammer(x, n, prec);
            const BigFloat rhs =
                exp(sub(lngamma(x + n, wp), lngamma(x, wp), wp), wp).round_to(prec);
            CHECK(abs(lhs - rhs) <= abs(ulp(rhs)) * 16);
        }
    }
}

TEST_CASE("geometric series sums to 2 with a certified bound") {
    const auto s = series({}, {}, rat(1, 2));
    const auto r = sum_linear(s, BigFloat::of(0, 256), 256, kTol20);
    CHECK(abs(r.value - BigFloat::of(2, 256)) <= r.error_estimate);
    CHECK(abs(r.value - BigFloat::of(2, 256)) <= kTol20);
    CHECK(r.method == SumMethod::Direct);
}

TEST_CASE("block size does not change the certified sum") {
    const auto s = series({aff(rat(1), rat(1, 2)), aff(rat(1), rat(1, 2)), aff(rat(1), rat(1, 2))},
                          {aff(rat(1), rat(1)), aff(rat(1), rat(1)), aff(rat(1), rat(1))},
                          rat(1, 4), 6 * n_var + 6 * a_var + 1);
    const BigFloat a = BigFloat::of(rat(3, 10), 320);
    const auto r1 = sum_linear(s, a, 320, kTol20, 100000, 0);
    const auto r2 = sum_linear(s, a, 320, kTol20, 100000, 7);
    const auto r3 = sum_linear(s, a, 320, kTol20, 100000, 64);
    CHECK(abs(r1.value - r2.value) <= add(r1.error_estimate, r2.error_estimate, 64));
    CHECK(abs(r1.value - r3.value) <= add(r1.error_estimate, r3.error_estimate, 64));
}

TEST_CASE("linear sum reproduces 4/pi at a = 0") {
    // z = 1/4, parameters (a+1/2)^3 over (a+1)^3, weight 6(n+a)+1
    const auto s = series({aff(rat(1), rat(1, 2)), aff(rat(1), rat(1, 2)), aff(rat(1), rat(1, 2))},
                          {aff(rat(1), rat(1)), aff(rat(1), rat(1)), aff(rat(1), rat(1))},
                          rat(1, 4), 6 * n_var + 6 * a_var + 1);
    const long prec = 300;
    const auto r = sum_linear(s, BigFloat::of(0, prec), prec, kTol20);
    const BigFloat expect = div(BigFloat::of(4, prec), constant(Constant::Pi, prec), prec);
    CHECK(abs(r.value - expect) <= BigFloat::parse("1e-24", 64));
}

TEST_CASE("linear sum reproduces 7 zeta(3) at a = 1/2") {
    // z = -1/4, parameters (a+1/2)^5 over (a+1)^5, weight 20(n+a)^2+8(n+a)+1
    const BiPoly m = n_var + a_var;
    const auto s = series(std::vector<AffineInA>(5, aff(rat(1), rat(1, 2))),
                          std::vector<AffineInA>(5, aff(rat(1), rat(1))), rat(-1, 4),
                          20 * m * m + 8 * m + 1);
    const long prec = 300;
    const auto r = sum_linear(s, BigFloat::of(rat(1, 2), prec), prec, kTol20);
    const BigFloat expect = constant(Constant::Zeta3, prec) * 7;
    CHECK(abs(r.value - expect) <= BigFloat::parse("1e-24", 64));
}

TEST_CASE("tolerance failure raises instead of returning junk") {
    const auto s = series({}, {}, rat(99, 100));
    CHECK_THROWS_AS(sum_linear(s, BigFloat::of(0, 128), 128, BigFloat::parse("1e-40", 64), 50),
                    ConvergenceError);
}

TEST_CASE("levin transform matches the direct formula at small depth") {
    // Direct evaluation of the u-transform via its explicit finite sums,
    // checked against the recurrence implementation on sum 1/(n+1)^2.
    const long wp = 320;
    const auto term = [](long j, long wpp) {
        return div(BigFloat::of(1, wpp), BigFloat::of((j + 1) * (j + 1), wpp), wpp);
    };
    const long K = 9;
    BigFloat num(wp), den(wp), s(wp);
    for (long j = 0; j <= K; ++j) {
        s = add(s, term(j, wp), wp);
        // w_j = (-1)^j C(K,j) (1+j)^(K-1); omega_j = (1+j) a_j
        BigFloat w = BigFloat::of(Rational(binomial(static_cast<unsigned long>(K),
                                                    static_cast<unsigned long>(j)) *
                                           pow_rat(rat(1 + j), K - 1).get_num()),
                                  wp);
        if (j % 2 == 1) w = -w;
        const BigFloat omega = term(j, wp) * (1 + j);
        num = add(num, div(mul(w, s, wp), omega, wp), wp);
        den = add(den, div(w, omega, wp), wp);
    }
    const BigFloat direct = div(num, den, wp);

    // Recurrence path, stopped exactly at K+1 terms.
    const auto lev = levin_u(term, wp, BigFloat::parse("1e-99", 64), K + 1);
    CHECK(lev.terms == K + 1);
    CHECK(abs(lev.value - direct) <= abs(mul(direct, BigFloat::parse("1e-60", 64), wp)));
}

TEST_CASE("accelerated sum of 1/n^2 hits pi^2/6") {
    // terms 1/(n+1)^2 = (1)_n^2 / (2)_n^2
    const auto s = series({aff(rat(0), rat(1)), aff(rat(0), rat(1))},
                          {aff(rat(0), rat(2)), aff(rat(0), rat(2))}, rat(1));
    const long prec = 256;
    const auto r = sum_algebraic(s, BigFloat::of(0, prec), prec, kTol20, 100000, rat(0));
    const BigFloat pi = constant(Constant::Pi, prec);
    const BigFloat expect = div(mul(pi, pi, prec), BigFloat::of(6, prec), prec);
    CHECK(r.method == SumMethod::Accelerated);
    CHECK(abs(r.value - expect) <= kTol20);
    CHECK(abs(r.value - expect) <= r.error_estimate);
}

TEST_CASE("accelerated sum reproduces pi^2/8 for the unit-ratio aux series at a=1/2") {
    // (1/2)_n^2 / (3/2)_n^2 with z = 1: reduces exactly to 1/(2n+1)^2.
    const auto s = series({aff(rat(0), rat(1, 2)), aff(rat(0), rat(1, 2))},
                          {aff(rat(1), rat(1)), aff(rat(1), rat(1))}, rat(1));
    const long prec = 256;
    const auto r = sum_algebraic(s, BigFloat::of(rat(1, 2), prec), prec, kTol20, 100000, rat(1, 2));
    const BigFloat pi = constant(Constant::Pi, prec);
    const BigFloat expect = div(mul(pi, pi, prec), BigFloat::of(8, prec), prec);
    CHECK(abs(r.value - expect) <= kTol20);
}

TEST_CASE("accelerated sum reproduces 4G/pi for the central-binomial series") {
    // (1/2)_n^3 / ((1)_n^2 (3/2)_n): the inner series of the Catalan limits.
    const auto s = series({aff(rat(0), rat(1, 2)), aff(rat(0), rat(1, 2)), aff(rat(0), rat(1, 2))},
                          {aff(rat(0), rat(1)), aff(rat(0), rat(1)), aff(rat(0), rat(3, 2))},
                          rat(1));
    const long prec = 300;
    const auto r =
        sum_algebraic(s, BigFloat::of(0, prec), prec, BigFloat::parse("1e-27", 64), 100000, rat(0));
    const BigFloat expect = div(constant(Constant::Catalan, prec) * 4, constant(Constant::Pi, prec), prec);
    CHECK(abs(r.value - expect) <= BigFloat::parse("1e-27", 64));
    CHECK(abs(r.value - expect) <= r.error_estimate);
}

TEST_CASE("slowly decaying exponent near -1.2 stays consistent across settings") {
    // (1/2)_n^2 / (a+1)_n^2 at a = 1/10: decay exponent -1.2; the hardest
    // shape in the registry. Doubling max_terms and raising precision must
    // stay inside the reported error estimates.
    const auto s = series({aff(rat(0), rat(1, 2)), aff(rat(0), rat(1, 2))},
                          {aff(rat(1), rat(1)), aff(rat(1), rat(1))}, rat(1));
    const Rational a = rat(1, 10);
    const auto r1 = sum_algebraic(s, BigFloat::of(a, 256), 256, kTol20, 50000, a);
    const auto r2 = sum_algebraic(s, BigFloat::of(a, 256), 256, kTol20, 100000, a);
    const auto r3 = sum_algebraic(s, BigFloat::of(a, 352), 352, BigFloat::parse("1e-33", 64), 100000, a);
    CHECK(abs(r1.value - r2.value) <= r1.error_estimate);
    CHECK(abs(r1.value.round_to(96) - r3.value.round_to(96)) <= kTol20);
    CHECK(abs(r1.value - r3.value.round_to(256)) <= add(r1.error_estimate, r3.error_estimate, 64));
}

TEST_CASE("route disagreement raises acceleration failure") {
    // A term sequence whose smooth continuation is deliberately inconsistent
    // with the terms: the dual-route check must refuse the result.
    TermSequence t;
    t.at = [](long n, long wp) {
        return div(BigFloat::of(1, wp), BigFloat::of((n + 1) * (n + 1), wp), wp);
    };
    t.at_real = [](const BigFloat& x, long wp) {
        const BigFloat xp1 = x + 1;
        return div(BigFloat::parse("1.001", wp), mul(xp1, xp1, wp), wp);
    };
    t.decay_s = rat(2);
    CHECK_THROWS_AS(sum_algebraic_terms(t, 192, BigFloat::parse("1e-20", 64), 50000),
                    ConvergenceError);
}

TEST_CASE("non-convergent requests are refused") {
    // exponent -1 at a=0: divergent
    const auto s = series({aff(rat(0), rat(1, 2)), aff(rat(0), rat(1, 2))},
                          {aff(rat(1), rat(1)), aff(rat(1), rat(1))}, rat(1));
    CHECK(s.admissibility_issue(rat(0)).has_value());
    CHECK_FALSE(s.admissibility_issue(rat(1, 10)).has_value());
    CHECK_THROWS_AS(sum_algebraic(s, BigFloat::of(0, 128), 128, kTol20, 1000, rat(0)),
                    ConvergenceError);
}

TEST_CASE("decay exponent bookkeeping") {
    const auto s = series({aff(rat(0), rat(1, 2)), aff(rat(1), rat(1, 2))},
                          {aff(rat(1), rat(1)), aff(rat(-1), rat(3, 2))}, rat(1));
    // c = (1/2 + a + 1/2) - (a + 1 + 3/2 - a) = a - 3/2
    const AffineInA c = s.decay_exponent();
    CHECK(c.coef == rat(1));
    CHECK(c.offset == rat(-3, 2));
}
