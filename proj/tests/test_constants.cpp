// Constants: binary-splitting route against the independent cross route.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wzs/constants.hpp"

using namespace wzs;

namespace {
void check_routes_agree(Constant c, long prec) {
    const BigFloat a = constant(c, prec);
    const BigFloat b = constant_alt(c, prec);
    INFO(constant_name(c), " at ", prec, " bits");
    CHECK(abs(a - b) <= abs(ulp(a)) * 8);
}
} // namespace

TEST_CASE("pi to 30 digits, second route agrees to full precision") {
    const long prec = 160;
    check_routes_agree(Constant::Pi, prec);
    CHECK(constant(Constant::Pi, prec).str(30) == "3.14159265358979323846264338328e0");
}

TEST_CASE("catalan to 20 digits") {
    const long prec = 128;
    check_routes_agree(Constant::Catalan, prec);
    CHECK(constant(Constant::Catalan, prec).str(20) == "9.1596559417721901505e-1");
}

TEST_CASE("zeta(3) to 20 digits") {
    const long prec = 128;
    check_routes_agree(Constant::Zeta3, prec);
    CHECK(constant(Constant::Zeta3, prec).str(20) == "1.2020569031595942854e0");
}

TEST_CASE("both routes agree for every constant at several precisions") {
    for (long prec : {96L, 256L, 700L})
        for (Constant c : {Constant::Pi, Constant::Ln2, Constant::Catalan, Constant::Zeta3,
                           Constant::Sqrt2, Constant::Sqrt3})
            check_routes_agree(c, prec);
}

TEST_CASE("monotone refinement") {
    for (Constant c : {Constant::Pi, Constant::Ln2, Constant::Catalan, Constant::Zeta3}) {
        const BigFloat lo = constant(c, 128);
        const BigFloat hi = constant(c, 512);
        CHECK(abs(lo - hi.round_to(128)) <= ulp(lo) * 2);
    }
}

TEST_CASE("ln of rationals") {
    const long prec = 256;
    const BigFloat l4 = ln_rational(rat(4), prec);
    const BigFloat l2 = constant(Constant::Ln2, prec);
    CHECK(abs(l4 - l2 * 2) <= abs(ulp(l4)) * 8);
    CHECK_THROWS_AS(ln_rational(rat(-1), 64), DomainError);
}
