// Hypergeometric terms, shift ratios, and exact WZ-certificate checks.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wzs/hyperterm.hpp"
#include "wzs/wzpair.hpp"

using namespace wzs;

namespace {

const BiPoly n = BiPoly::var_n();
const BiPoly k = BiPoly::var_k();

// Factorial-product oracle for the first certificate's kernel:
// B(n,k) = 1/(2^8n 2^4k) (2k)!^2 (2n)!^3 / ((n+k)!^2 k!^2 n!^4)
Rational id1A_kernel(unsigned long nn, unsigned long kk) {
    const Rational num(factorial(2 * kk) * factorial(2 * kk) * factorial(2 * nn) *
                       factorial(2 * nn) * factorial(2 * nn));
    const Rational den(factorial(nn + kk) * factorial(nn + kk) * factorial(kk) * factorial(kk) *
                       factorial(nn) * factorial(nn) * factorial(nn) * factorial(nn));
    return num / den * pow_rat(rat(1, 256), static_cast<long>(nn)) *
           pow_rat(rat(1, 16), static_cast<long>(kk));
}

} // namespace

TEST_CASE("shift ratios of the first certificate kernel") {
    const HyperTerm& B = certificate("id1-pairA").B;

    // Oracle first: exact factorial quotients at fixed lattice points.
    const Rational rho_n_22 = id1A_kernel(3, 2) / id1A_kernel(2, 2);
    const Rational rho_k_22 = id1A_kernel(2, 3) / id1A_kernel(2, 2);

    const RatFunc rho_n = B.shift_ratio(HyperTerm::Direction::N);
    const RatFunc rho_k = B.shift_ratio(HyperTerm::Direction::K);
    CHECK(rho_n.eval(rat(2), rat(2)) == rho_n_22);
    CHECK(rho_k.eval(rat(2), rat(2)) == rho_k_22);

    // Closed forms of the quotients.
    CHECK(rho_n.same_value(RatFunc(rat(1, 256) * ((2 * n + 1).pow(3) * (2 * n + 2).pow(3)),
                                   (n + k + 1).pow(2) * (n + 1).pow(4))));
    CHECK(rho_k.same_value(RatFunc((2 * k + 1).pow(2), 4 * (n + k + 1).pow(2))));
}

TEST_CASE("shift ratio of a bare geometric term is its base") {
    HyperTerm t(rat(1), rat(1, 2), rat(1), {});
    CHECK(t.shift_ratio(HyperTerm::Direction::N).same_value(RatFunc(rat(1, 2))));
}

TEST_CASE("shift ratios match exact kernel quotients everywhere") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> pt(0, 9);
    for (const auto& pair : all_certificates()) {
        const RatFunc rho_n = pair.B.shift_ratio(HyperTerm::Direction::N);
        const RatFunc rho_k = pair.B.shift_ratio(HyperTerm::Direction::K);
        for (int i = 0; i < 10; ++i) {
            const long nn = pt(rng), kk = pt(rng);
            const Rational b = pair.B.eval_exact(nn, kk);
            if (b == 0) continue;
            CHECK(rho_n.eval(rat(nn), rat(kk)) == pair.B.eval_exact(nn + 1, kk) / b);
            CHECK(rho_k.eval(rat(nn), rat(kk)) == pair.B.eval_exact(nn, kk + 1) / b);
        }
    }
}

TEST_CASE("first certificate has an exactly zero defect") {
    // Oracle first: raw relation in rational arithmetic at lattice points.
    const WZPair& pair = certificate("id1-pairA");
    for (long nn = 0; nn <= 6; ++nn)
        for (long kk = 0; kk <= 6; ++kk) CHECK(wz_relation_holds_at(pair, nn, kk));

    const auto res = check_wz(pair);
    CHECK(res.valid);
    CHECK(res.defect.is_zero());
}

TEST_CASE("perturbing the G multiplier breaks telescoping") {
    WZPair bad = certificate("id1-pairA");
    bad.RG = RatFunc(6 * n + 4 * k + 2);
    const auto res = check_wz(bad);
    CHECK_FALSE(res.valid);
    CHECK_FALSE(res.defect.is_zero());
    // The numeric lattice check must agree with the symbolic verdict.
    bool fails_somewhere = false;
    for (long nn = 0; nn <= 4 && !fails_somewhere; ++nn)
        for (long kk = 0; kk <= 4 && !fails_somewhere; ++kk)
            fails_somewhere = !wz_relation_holds_at(bad, nn, kk);
    CHECK(fails_somewhere);
}

TEST_CASE("fifth-power certificate checks out on the lattice and symbolically") {
    const WZPair& pair = certificate("id8-pairA");
    // Numeric check of the raw relation before any symbolic expansion.
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> pt(0, 10);
    for (int i = 0; i < 20; ++i) CHECK(wz_relation_holds_at(pair, pt(rng), pt(rng)));
    CHECK(check_wz(pair).valid);
}

TEST_CASE("half-integer certificate id1-pairB is valid") {
    const WZPair& pair = certificate("id1-pairB");
    for (long nn = 0; nn <= 6; ++nn)
        for (long kk = 0; kk <= 6; ++kk) CHECK(wz_relation_holds_at(pair, nn, kk));
    CHECK(check_wz(pair).valid);
}

TEST_CASE("symbolic verdict agrees with the exact lattice relation for all certificates") {
    for (const auto& pair : all_certificates()) {
        const bool valid = check_wz(pair).valid;
        bool holds_everywhere = true;
        for (long nn = 0; nn <= 12; ++nn)
            for (long kk = 0; kk <= 12; ++kk)
                if (!wz_relation_holds_at(pair, nn, kk)) {
                    holds_everywhere = false;
                    break;
                }
        INFO("certificate ", pair.name);
        CHECK(valid == holds_everywhere);
    }
}

TEST_CASE("defect scales with a common constant, verdict does not change") {
    WZPair scaled = certificate("id1-pairA");
    scaled.RF = RatFunc(rat(7, 3)) * scaled.RF;
    scaled.RG = RatFunc(rat(7, 3)) * scaled.RG;
    CHECK(check_wz(scaled).valid);

    WZPair scaled_bad = certificate("id1-pairA");
    scaled_bad.RG = RatFunc(6 * n + 4 * k + 2);
    const RatFunc d1 = wz_defect(scaled_bad);
    scaled_bad.RF = RatFunc(rat(5)) * scaled_bad.RF;
    scaled_bad.RG = RatFunc(rat(5)) * scaled_bad.RG;
    const RatFunc d5 = wz_defect(scaled_bad);
    CHECK(d5.same_value(RatFunc(rat(5)) * d1));
    CHECK_FALSE(check_wz(scaled_bad).valid);
}

TEST_CASE("real evaluation of the first kernel") {
    const HyperTerm& B = certificate("id1-pairA").B;
    const long prec = 192;
    const BigFloat zero = BigFloat::of(0, prec);

    // Empty products at the origin.
    const BigFloat at00 = B.eval_real(0, zero, 0, prec);
    CHECK(abs(at00 - BigFloat::of(1, prec)) < BigFloat::parse("1e-40", 64));

    // B(1,0) = 1/32 by direct factorials.
    const BigFloat at10 = B.eval_real(1, zero, 0, prec);
    CHECK(abs(at10 - BigFloat::of(rat(1, 32), prec)) < BigFloat::parse("1e-40", 64));
    CHECK(B.eval_exact(1, 0) == rat(1, 32));

    // B(a, 0) against the rising-factorial prefactor form (1/2)_a^3/(1)_a^3 * 4^-a
    // at a = 1/2.
    const BigFloat half = BigFloat::of(rat(1, 2), prec);
    const BigFloat lhs = B.eval_real(0, half, 0, prec);
    auto poch_a = [&](const Rational& x, const BigFloat& a) {
        const BigFloat xx = BigFloat::of(x, prec);
        return exp(sub(lngamma(add(xx, a, prec), prec), lngamma(xx, prec), prec), prec);
    };
    BigFloat pref = poch_a(rat(1, 2), half);
    pref = mul(mul(pref, pref, prec), pref, prec); // (1/2)_a^3
    BigFloat den = poch_a(rat(1), half);
    den = mul(mul(den, den, prec), den, prec); // (1)_a^3
    const BigFloat rhs =
        mul(div(pref, den, prec), pow(BigFloat::of(4, prec), -half, prec), prec);
    CHECK(abs(lhs - rhs) < BigFloat::parse("1e-40", 64));
}

TEST_CASE("gamma poles at shifted arguments are reported") {
    const HyperTerm& B = certificate("id1-pairA").B;
    // shift -1 puts the n!^4 factor at Gamma(0)
    CHECK_THROWS_AS(B.eval_real(0, BigFloat::of(-1, 128), 0, 128), PoleError);
}

TEST_CASE("ratio limits recover geometric decay rates") {
    CHECK(certificate("id1-pairA").B.ratio_limit(HyperTerm::Direction::N) == rat(1, 4));
    CHECK(certificate("id1-pairB").B.ratio_limit(HyperTerm::Direction::K) == rat(1));
}
