// Registry content and the verification operations over it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wzs/checks.hpp"
#include "wzs/constants.hpp"

using namespace wzs;

namespace {
const BigFloat kRel20 = BigFloat::parse("1e-20", 64);
BigFloat rel_diff(const BigFloat& x, const BigFloat& y) {
    const long wp = std::max(x.prec(), y.prec());
    return div(abs(sub(x, y, wp)), max(abs(x), abs(y)), 64);
}
} // namespace

TEST_CASE("registry shape") {
    CHECK(registry().size() == 10);
    CHECK(identity(1).variants.size() == 2);
    CHECK(identity(7).variants.size() == 1);
    CHECK(identity(8).variants.size() == 3);
    CHECK(identity(8).aux_g.has_value());
    CHECK(identity(7).special_values.empty());
    CHECK(identity(3).lhs.ratio_z == rat(-1, 8));
    CHECK(identity(5).lhs.ratio_z == rat(-27, 512));
    CHECK(identity(10).catalan.has_value());
    // every lhs is linearly convergent; aux variants carry their own series
    for (const auto& d : registry()) CHECK(d.lhs.is_linear());
}

TEST_CASE("lhs values at a = 1/2 match the registered closed forms") {
    const long prec = 280;
    // pi^2/2 for identity 1
    const auto r1 = eval_lhs(1, rat(1, 2), prec, BigFloat::parse("1e-28", 64));
    const BigFloat pi = constant(Constant::Pi, prec);
    CHECK(rel_diff(r1.value, div(mul(pi, pi, prec), BigFloat::of(2, prec), prec)) <= kRel20);
    // 8 pi^2/3 for identity 2
    const auto r2 = eval_lhs(2, rat(1, 2), prec, BigFloat::parse("1e-28", 64));
    CHECK(rel_diff(r2.value, div(mul(pi, pi, prec) * 8, BigFloat::of(3, prec), prec)) <= kRel20);
    // sqrt3 pi for identity 6
    const auto r6 = eval_lhs(6, rat(1, 2), prec, BigFloat::parse("1e-28", 64));
    CHECK(rel_diff(r6.value, mul(constant(Constant::Sqrt3, prec), pi, prec)) <= kRel20);
}

TEST_CASE("rhs of (1) at a = 1/2 reduces to pi^2/2") {
    const long prec = 280;
    const auto r = eval_rhs(1, "(1)", rat(1, 2), prec, BigFloat::parse("1e-26", 64));
    const BigFloat pi = constant(Constant::Pi, prec);
    CHECK(rel_diff(r.value, div(mul(pi, pi, prec), BigFloat::of(2, prec), prec)) <= kRel20);
}

TEST_CASE("rhs of (2) at a = 0 is the bare prefactor 4/pi") {
    const long prec = 280;
    const auto r = eval_rhs(1, "(2)", rat(0), prec, BigFloat::parse("1e-26", 64));
    const BigFloat expect = div(BigFloat::of(4, prec), constant(Constant::Pi, prec), prec);
    CHECK(rel_diff(r.value, expect) <= kRel20);
}

TEST_CASE("rhs of (13) at a = 1/2 gives 7 zeta(3)") {
    const long prec = 280;
    const auto r = eval_rhs(8, "(13)", rat(1, 2), prec, BigFloat::parse("1e-26", 64));
    CHECK(rel_diff(r.value, constant(Constant::Zeta3, prec) * 7) <= kRel20);
}

TEST_CASE("identity checks pass at an interior grid point") {
    for (const auto& [id, variant] : std::vector<std::pair<int, const char*>>{
             {1, "(1)"}, {1, "(2)"}, {8, "(14)"}}) {
        const auto rep = check_identity(id, variant, rat(3, 10), 256, kRel20);
        INFO("identity ", id, " variant ", variant, " diff ", rep.rel_diff.str(5));
        CHECK(rep.pass);
        CHECK(rep.rel_diff <= kRel20);
    }
}

TEST_CASE("a perturbed weight is caught by the grid check") {
    const IdentityDef bad = perturb_lhs_weight(identity(1), 0);
    // evaluate the perturbed lhs against the true rhs
    const auto l = sum_linear(bad.lhs, BigFloat::of(rat(3, 10), 300), 280,
                              BigFloat::parse("1e-26", 64));
    const auto r = eval_rhs(1, "(1)", rat(3, 10), 280, BigFloat::parse("1e-26", 64));
    CHECK(rel_diff(l.value, r.value) > BigFloat::parse("1e-6", 64));
}

TEST_CASE("special values of identities 3 and 4") {
    for (const auto& rep : check_special_values(3, 256, kRel20)) {
        CHECK(rep.pass);
    }
    for (const auto& rep : check_special_values(4, 256, kRel20)) {
        CHECK(rep.pass);
    }
}

TEST_CASE("derivative table spot checks") {
    const BigFloat h = BigFloat::parse("1e-10", 64);
    const BigFloat rel8 = BigFloat::parse("1e-8", 64);
    const auto d0 = check_derivative(1, 0, h, 256, kRel20);
    CHECK(d0.pass);
    const auto d1 = check_derivative(1, 1, h, 256, rel8);
    INFO("f'(0) rel diff ", d1.rel_diff.str(5));
    CHECK(d1.pass);
    const auto d2 = check_derivative(8, 2, h, 256, rel8);
    INFO("f''(0) rel diff ", d2.rel_diff.str(5));
    CHECK(d2.pass);
}

TEST_CASE("catalan limit of identity 8 by both routes") {
    const auto reps = check_catalan_limit(8, 256, BigFloat::parse("1e-6", 64),
                                          BigFloat::parse("1e-20", 64));
    INFO("extrapolated rel diff ", reps.extrapolated.rel_diff.str(5));
    CHECK(reps.extrapolated.pass);
    INFO("inner rel diff ", reps.inner.rel_diff.str(5));
    CHECK(reps.inner.pass);
}

TEST_CASE("telescoping of the first certificate at a = 3/10") {
    const auto& pair = certificate("id1-pairA");
    for (long K : {0L, 1L, 5L}) {
        const auto rep = check_telescoping(pair, rat(3, 10), K, 256, BigFloat::parse("1e-25", 64));
        INFO("K = ", K, " residual ", rep.abs_diff.str(5));
        CHECK(rep.pass);
    }
}

TEST_CASE("boundary function of the second certificate") {
    const auto& pair = certificate("id1-pairB");
    const auto reps = check_boundary_limit(pair, rat(1, 4), 256, BigFloat::parse("1e-6", 64),
                                           BigFloat::parse("1e-20", 64));
    // S(1/4) = 4/(pi cos^2(pi/4)) = 8/pi
    const BigFloat expect = div(BigFloat::of(8, 256), constant(Constant::Pi, 256), 256);
    CHECK(rel_diff(reps.finite_route.lhs, expect) <= BigFloat::parse("1e-19", 64));
    INFO("columns rel diff ", reps.column_route.rel_diff.str(5));
    CHECK(reps.column_route.pass);
    INFO("finite rel diff ", reps.finite_route.rel_diff.str(5));
    CHECK(reps.finite_route.pass);
}

TEST_CASE("composed variants agree with their substitution structure") {
    for (int id : {8, 10}) {
        const auto rep = check_composition(id, rat(3, 10), 240, BigFloat::parse("1e-18", 64));
        INFO("identity ", id, " composition rel diff ", rep.rel_diff.str(5));
        CHECK(rep.pass);
    }
}

TEST_CASE("identity 9 statement (16) holds at a = 1/2 where both sides are 256 zeta(3)") {
    const auto rep = check_identity(9, "(16)", rat(1, 2), 256, kRel20);
    CHECK(rep.pass);
    const BigFloat expect = constant(Constant::Zeta3, 256) * 256;
    CHECK(rel_diff(rep.lhs, expect) <= kRel20);
    CHECK(rel_diff(rep.rhs, expect) <= kRel20);
}

TEST_CASE("all rhs variants of identity 8 agree with each other") {
    const Rational a = rat(3, 10);
    const BigFloat tol_abs = BigFloat::parse("1e-24", 64);
    const auto r13 = eval_rhs(8, "(13)", a, 256, tol_abs);
    const auto r14 = eval_rhs(8, "(14)", a, 256, tol_abs);
    const auto r15 = eval_rhs(8, "(15)", a, 256, tol_abs);
    const BigFloat budget13_14 = add(r13.error_estimate, r14.error_estimate, 64);
    const BigFloat budget14_15 = add(r14.error_estimate, r15.error_estimate, 64);
    CHECK(abs(sub(r13.value, r14.value, 256)) <=
          add(budget13_14, BigFloat::parse("1e-22", 64), 64));
    CHECK(abs(sub(r14.value, r15.value, 256)) <=
          add(budget14_15, BigFloat::parse("1e-22", 64), 64));
}

TEST_CASE("verdicts are stable under doubling precision and halving tolerance") {
    const auto r1 = check_identity(2, "(4)", rat(1, 5), 256, kRel20);
    const auto r2 = check_identity(2, "(4)", rat(1, 5), 512, div(kRel20, BigFloat::of(2, 64), 64));
    CHECK(r1.pass);
    CHECK(r2.pass);
    CHECK(r1.pass == r2.pass);
}

TEST_CASE("singular points are detected") {
    CHECK_THROWS_AS(require_admissible(1, "(2)", rat(1, 2)), DomainError);
    CHECK_THROWS_AS(require_admissible(6, "(11)", rat(1, 4)), DomainError);
    CHECK_THROWS_AS(eval_rhs(1, "(1)", rat(0), 128, BigFloat::parse("1e-10", 64)), DomainError);
    CHECK_NOTHROW(require_admissible(1, "(2)", rat(3, 10)));
}
