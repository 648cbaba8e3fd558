#include "wzs/registry.hpp"

#include <algorithm>

namespace wzs {

namespace {

const Rational kHalf = rat(1, 2);
const Rational kOne = rat(1);

// parameter shorthands: p(c, o) stands for c*a + o
AffineInA p(const Rational& c, const Rational& o) { return aff(c, o); }
AffineInA pa_plus(const Rational& o) { return aff(kOne, o); } // a + o
AffineInA pconst(const Rational& o) { return aff(rat(0), o); }

PochhammerSeries make_series(std::vector<AffineInA> num, std::vector<AffineInA> den, Rational z,
                             BiPoly w = BiPoly(1)) {
    PochhammerSeries s;
    s.num_params = std::move(num);
    s.den_params = std::move(den);
    s.ratio_z = std::move(z);
    s.weight = std::move(w);
    return s;
}

std::vector<AffineInA> rep(const AffineInA& x, int count) {
    return std::vector<AffineInA>(static_cast<size_t>(count), x);
}

// weight helpers in m = n + a
BiPoly m_lin(long c1, long c0) {
    const BiPoly m = BiPoly::var_n() + BiPoly::var_k(); // second variable is a
    return c1 * m + c0;
}
BiPoly m_quad(long c2, long c1, long c0) {
    const BiPoly m = BiPoly::var_n() + BiPoly::var_k();
    return c2 * m * m + c1 * m + c0;
}

// closed-form shorthands
ClosedForm inv_2am1() { return cf(1) / (cf(2) * cf_a() - cf(1)); } // 1/(2a-1)
ClosedForm inv_4am1() { return cf(1) / (cf(4) * cf_a() - cf(1)); } // 1/(4a-1)
ClosedForm a_sq() { return cf_a() * cf_a(); }
ClosedForm a_cube() { return cf_a() * cf_a() * cf_a(); }
ClosedForm poch_pow(const Rational& base, int e) {
    ClosedForm r = cf_poch(base);
    for (int i = 1; i < e; ++i) r = r * cf_poch(base);
    return r;
}
ClosedForm cospi_pow(const Rational& mult, int e) {
    ClosedForm r = cf_cospi(mult);
    for (int i = 1; i < e; ++i) r = r * cf_cospi(mult);
    return r;
}
ClosedForm ln2() { return cf_const(Constant::Ln2); }
ClosedForm ln3() { return cf_ln(rat(3)); }
ClosedForm pi_sq() { return cf_pi() * cf_pi(); }
ClosedForm sqrt2() { return cf_const(Constant::Sqrt2); }
ClosedForm sqrt3() { return cf_const(Constant::Sqrt3); }

std::vector<IdentityDef> build_registry() {
    std::vector<IdentityDef> reg;

    // Recurring aux series.
    // sum (a+1/2)_n^2 / ((2a+1)_n (3/2-a)_n), z = 1   [variant (4), reused by (18), (21)]
    const PochhammerSeries aux_b2 =
        make_series(rep(pa_plus(kHalf), 2), {p(rat(2), kOne), p(rat(-1), rat(3, 2))}, kOne);

    // ---------------------------------------------------------- identity 1
    {
        IdentityDef d;
        d.id = 1;
        d.lhs = make_series(rep(pa_plus(kHalf), 3), rep(pa_plus(kOne), 3), rat(1, 4), m_lin(6, 1));
        RhsVariant v1{"(1)",
                      {{cf(8) * cf_a(),
                        make_series(rep(pconst(kHalf), 2), rep(pa_plus(kOne), 2), kOne)}}};
        RhsVariant v2{"(2)",
                      {{cf(4) / cf_pi() * cf_pow(rat(4), kOne) / cospi_pow(kOne, 2) *
                            poch_pow(kOne, 3) / poch_pow(kHalf, 3),
                        std::nullopt},
                       {cf(16) * a_sq() * inv_2am1(),
                        make_series({pconst(kHalf), pa_plus(kHalf)},
                                    {pa_plus(kOne), p(rat(-1), rat(3, 2))}, kOne)}}};
        d.variants = {v1, v2};
        d.special_values = {{kHalf, pi_sq() / cf(2)}};
        d.derivatives = {cf(4) / cf_pi(), cf(32) / cf_pi() * ln2(),
                         cf(4) / cf_pi() * (cf(64) * ln2() * ln2() - cf(3) * pi_sq())};
        reg.push_back(std::move(d));
    }

    // ---------------------------------------------------------- identity 2
    {
        IdentityDef d;
        d.id = 2;
        d.lhs = make_series(rep(pa_plus(kHalf), 3), rep(pa_plus(kOne), 3), rat(1, 64), m_lin(42, 5));
        RhsVariant v1{"(3)",
                      {{cf(32) * cf_a(),
                        make_series(rep(pa_plus(kHalf), 2), rep(p(rat(2), kOne), 2), kOne)}}};
        RhsVariant v2{"(4)",
                      {{cf(16) / cf_pi() * cf_pow(rat(64), kOne) / cospi_pow(kOne, 2) *
                            poch_pow(kOne, 3) / poch_pow(kHalf, 3),
                        std::nullopt},
                       {cf(128) * a_sq() * inv_2am1(), aux_b2}}};
        d.variants = {v1, v2};
        d.special_values = {{kHalf, cf(8) * pi_sq() / cf(3)}};
        d.derivatives = {cf(16) / cf_pi(), cf(192) / cf_pi() * ln2(),
                         cf(16) / cf_pi() * (cf(144) * ln2() * ln2() - cf(7) * pi_sq())};
        reg.push_back(std::move(d));
    }

    // ---------------------------------------------------------- identity 3
    {
        IdentityDef d;
        d.id = 3;
        d.lhs = make_series(rep(pa_plus(kHalf), 3), rep(pa_plus(kOne), 3), rat(-1, 8), m_lin(6, 1));
        RhsVariant v1{"(5)",
                      {{cf(4) * cf_a(),
                        make_series({p(kHalf, rat(1, 4)), p(kHalf, rat(3, 4))},
                                    rep(pa_plus(kOne), 2), kOne)}}};
        RhsVariant v2{"(6)",
                      {{cf(2) * sqrt2() / cf_pi() * cf_pow(rat(8), kOne) / cf_cospi(kOne) *
                            poch_pow(kOne, 3) / poch_pow(kHalf, 3),
                        std::nullopt},
                       {cf(16) * a_sq() * inv_2am1(),
                        make_series(rep(pa_plus(kHalf), 2),
                                    {pa_plus(kOne), p(rat(-1), rat(3, 2))}, rat(1, 2))}}};
        d.variants = {v1, v2};
        d.special_values = {{kHalf, cf(4) * cf_const(Constant::Catalan)}};
        d.derivatives = {cf(2) * sqrt2() / cf_pi(), cf(18) * sqrt2() / cf_pi() * ln2(),
                         cf(2) * sqrt2() / cf_pi() *
                             (cf(81) * ln2() * ln2() - cf(4) * pi_sq())};
        reg.push_back(std::move(d));
    }

    // ---------------------------------------------------------- identity 4
    {
        IdentityDef d;
        d.id = 4;
        d.lhs = make_series({pa_plus(kHalf), pa_plus(rat(1, 4)), pa_plus(rat(3, 4))},
                            rep(pa_plus(kOne), 3), rat(-1, 4), m_lin(20, 3));
        RhsVariant v1{"(7)",
                      {{cf(16) * cf_a(),
                        make_series({pconst(kHalf), pa_plus(kHalf)},
                                    {pa_plus(kOne), p(rat(2), kOne)}, kOne)}}};
        RhsVariant v2{"(8)",
                      {{cf(8) / cf_pi() * cf_pow(rat(4), kOne) / cf_cospi(kOne) *
                            poch_pow(kOne, 3) /
                            (cf_poch(kHalf) * cf_poch(rat(1, 4)) * cf_poch(rat(3, 4))),
                        std::nullopt},
                       {cf(48) * a_sq() * inv_2am1(),
                        make_series({pa_plus(kHalf), p(rat(2), kHalf)},
                                    {pa_plus(kOne), p(rat(-1), rat(3, 2))}, rat(1, 4))}}};
        d.variants = {v1, v2};
        d.special_values = {{kHalf, cf(16) * ln2()}};
        d.derivatives = {cf(8) / cf_pi(), cf(80) / cf_pi() * ln2(),
                         cf(8) / cf_pi() * (cf(100) * ln2() * ln2() - cf(5) * pi_sq())};
        reg.push_back(std::move(d));
    }

    // ---------------------------------------------------------- identity 5
    {
        IdentityDef d;
        d.id = 5;
        d.lhs = make_series({pa_plus(kHalf), pa_plus(rat(1, 6)), pa_plus(rat(5, 6))},
                            rep(pa_plus(kOne), 3), rat(-27, 512), m_lin(154, 15));
        RhsVariant v1{"(9)",
                      {{cf(128) * cf_a(),
                        make_series({p(kHalf, rat(1, 4)), p(kHalf, rat(3, 4))},
                                    {pa_plus(kOne), p(rat(2), kOne)}, kOne)}}};
        RhsVariant v2{"(10)",
                      {{cf(32) * sqrt2() / cf_pi() * cf_pow(rat(512, 27), kOne) / cf_cospi(kOne) *
                            poch_pow(kOne, 3) /
                            (cf_poch(kHalf) * cf_poch(rat(1, 6)) * cf_poch(rat(5, 6))),
                        std::nullopt},
                       {cf(512) * a_sq() * inv_2am1(),
                        make_series({pa_plus(kHalf), p(rat(3), kHalf)},
                                    {p(rat(2), kOne), p(rat(-1), rat(3, 2))}, rat(1, 2))}}};
        d.variants = {v1, v2};
        d.special_values = {{kHalf, cf(128) * ln2()}};
        d.derivatives = {cf(32) * sqrt2() / cf_pi(), cf(480) * sqrt2() / cf_pi() * ln2(),
                         cf(32) * sqrt2() / cf_pi() *
                             (cf(225) * ln2() * ln2() - cf(11) * pi_sq())};
        reg.push_back(std::move(d));
    }

    // ---------------------------------------------------------- identity 6
    {
        IdentityDef d;
        d.id = 6;
        d.lhs = make_series({pa_plus(kHalf), pa_plus(rat(1, 4)), pa_plus(rat(3, 4))},
                            rep(pa_plus(kOne), 3), rat(1, 9), m_lin(8, 1));
        RhsVariant v1{"(11)",
                      {{cf(2) * sqrt3() / cf_pi() * cf_pow(rat(9), kOne) / cf_cospi(rat(2)) *
                            poch_pow(kOne, 3) /
                            (cf_poch(kHalf) * cf_poch(rat(1, 4)) * cf_poch(rat(3, 4))),
                        std::nullopt},
                       {cf(36) * a_sq() * inv_4am1(),
                        make_series({pconst(kHalf), pa_plus(kHalf)},
                                    {pa_plus(kOne), p(rat(-2), rat(3, 2))}, rat(3, 4))}}};
        d.variants = {v1};
        d.special_values = {{kHalf, sqrt3() * cf_pi()}};
        d.derivatives = {cf(2) * sqrt3() / cf_pi(),
                         cf(4) * sqrt3() / cf_pi() * (ln3() + cf(4) * ln2()),
                         cf(4) * sqrt3() / cf_pi() *
                             (cf(32) * ln2() * ln2() + cf(2) * ln3() * ln3() +
                              cf(16) * ln3() * ln2() - cf(3) * pi_sq())};
        reg.push_back(std::move(d));
    }

    // ---------------------------------------------------------- identity 7
    {
        IdentityDef d;
        d.id = 7;
        d.lhs = make_series({pa_plus(kHalf), pa_plus(rat(1, 4)), pa_plus(rat(3, 4))},
                            rep(pa_plus(kOne), 3), rat(-1, 48), m_lin(28, 3));
        RhsVariant v1{"(12)",
                      {{cf(16) * sqrt3() / (cf(3) * cf_pi()) * cf_pow(rat(48), kOne) /
                            cf_cospi(kOne) * poch_pow(kOne, 3) /
                            (cf_poch(kHalf) * cf_poch(rat(1, 4)) * cf_poch(rat(3, 4))),
                        std::nullopt},
                       {cf(96) * a_sq() * inv_2am1(),
                        make_series({pa_plus(kHalf), p(rat(2), kHalf)},
                                    {p(rat(2), kOne), p(rat(-1), rat(3, 2))}, rat(3, 4))}}};
        d.variants = {v1};
        d.derivatives = {cf(16) * sqrt3() / (cf(3) * cf_pi()),
                         cf(16) * sqrt3() / (cf(3) * cf_pi()) * (ln3() + cf(12) * ln2()),
                         cf(16) * sqrt3() / (cf(3) * cf_pi()) *
                             (cf(144) * ln2() * ln2() + ln3() * ln3() +
                              cf(24) * ln3() * ln2() - cf(9) * pi_sq())};
        reg.push_back(std::move(d));
    }

    // ---------------------------------------------------------- identity 8
    {
        IdentityDef d;
        d.id = 8;
        d.lhs = make_series(rep(pa_plus(kHalf), 5), rep(pa_plus(kOne), 5), rat(-1, 4),
                            m_quad(20, 8, 1));
        d.aux_g = make_series(rep(pa_plus(kHalf), 3), rep(pa_plus(kOne), 3), rat(1, 4), m_lin(6, 1));
        const PochhammerSeries t14 =
            make_series({pconst(kHalf), pconst(kHalf), pa_plus(kHalf)},
                        {pa_plus(kOne), pa_plus(kOne), p(rat(-1), rat(3, 2))}, kOne);
        const PochhammerSeries t15b =
            make_series({pconst(kHalf), pa_plus(kHalf)}, {pa_plus(kOne), p(rat(-1), rat(3, 2))},
                        kOne);
        const ClosedForm gpref = cf(2) / cf_pi() / cf_cospi(kOne) * poch_pow(kOne, 2) /
                                 poch_pow(kHalf, 2);
        RhsVariant v1{"(13)",
                      {{cf(8) * cf_a(),
                        make_series(rep(pconst(kHalf), 4), rep(pa_plus(kOne), 4), kOne,
                                    4 * BiPoly::var_n() + 2 * BiPoly::var_k() + 1)}}};
        RhsVariant v2{"(14)", {{gpref, *d.aux_g}, {cf(32) * a_cube() * inv_2am1(), t14}}};
        RhsVariant v3{"(15)",
                      {{cf(8) / pi_sq() * cf_pow(rat(4), kOne) / cospi_pow(kOne, 3) *
                            poch_pow(kOne, 5) / poch_pow(kHalf, 5),
                        std::nullopt},
                       {cf(32) / cf_pi() / cf_cospi(kOne) * poch_pow(kOne, 2) /
                            poch_pow(kHalf, 2) * a_sq() * inv_2am1(),
                        t15b},
                       {cf(32) * a_cube() * inv_2am1(), t14}}};
        d.variants = {v1, v2, v3};
        d.special_values = {{kHalf, cf(7) * cf_const(Constant::Zeta3)}};
        d.derivatives = {cf(8) / pi_sq(), cf(96) / pi_sq() * ln2(),
                         cf(64) / (cf(3) * pi_sq()) *
                             (cf(54) * ln2() * ln2() - pi_sq())};
        d.catalan = CatalanLimit{cf(-128) * cf_const(Constant::Catalan) / cf_pi(), rat(-32), t14,
                                 gpref};
        d.composition = Composition{"(15)", "(14)", 1, "(2)"};
        reg.push_back(std::move(d));
    }

    // ---------------------------------------------------------- identity 9
    {
        IdentityDef d;
        d.id = 9;
        d.lhs = make_series(rep(pa_plus(kHalf), 5), rep(pa_plus(kOne), 5), rat(-1, 1024),
                            m_quad(820, 180, 13));
        d.aux_g =
            make_series(rep(pa_plus(kHalf), 3), rep(pa_plus(kOne), 3), rat(1, 64), m_lin(42, 5));
        const PochhammerSeries t17 =
            make_series(rep(pa_plus(kHalf), 3),
                        {p(rat(2), kOne), p(rat(2), kOne), p(rat(-1), rat(3, 2))}, kOne);
        const ClosedForm gpref = cf(8) / cf_pi() * cf_pow(rat(16), kOne) / cf_cospi(kOne) *
                                 poch_pow(kOne, 2) / poch_pow(kHalf, 2);
        RhsVariant v1{"(16)",
                      {{cf(128) * cf_a(),
                        make_series(rep(pa_plus(kHalf), 4), rep(p(rat(2), kOne), 4), kOne,
                                    4 * BiPoly::var_n() + 6 * BiPoly::var_k() + 1)}}};
        RhsVariant v2{"(17)", {{gpref, *d.aux_g}, {cf(2048) * a_cube() * inv_2am1(), t17}}};
        RhsVariant v3{"(18)",
                      {{cf(128) / pi_sq() * cf_pow(rat(1024), kOne) / cospi_pow(kOne, 3) *
                            poch_pow(kOne, 5) / poch_pow(kHalf, 5),
                        std::nullopt},
                       {cf(1024) / cf_pi() * cf_pow(rat(16), kOne) / cf_cospi(kOne) *
                            poch_pow(kOne, 2) / poch_pow(kHalf, 2) * a_sq() * inv_2am1(),
                        aux_b2},
                       {cf(2048) * a_cube() * inv_2am1(), t17}}};
        d.variants = {v1, v2, v3};
        d.special_values = {{kHalf, cf(256) * cf_const(Constant::Zeta3)}};
        d.derivatives = {cf(128) / pi_sq(), cf(2560) / pi_sq() * ln2(),
                         cf(2560) / (cf(3) * pi_sq()) *
                             (cf(60) * ln2() * ln2() - pi_sq())};
        d.catalan = CatalanLimit{cf(-8192) * cf_const(Constant::Catalan) / cf_pi(), rat(-2048),
                                 t17, gpref};
        d.composition = Composition{"(18)", "(17)", 2, "(4)"};
        reg.push_back(std::move(d));
    }

    // --------------------------------------------------------- identity 10
    {
        IdentityDef d;
        d.id = 10;
        d.lhs = make_series({pa_plus(kHalf), pa_plus(kHalf), pa_plus(kHalf), pa_plus(rat(1, 4)),
                             pa_plus(rat(3, 4))},
                            rep(pa_plus(kOne), 5), rat(1, 16), m_quad(120, 34, 3));
        d.aux_g =
            make_series(rep(pa_plus(kHalf), 3), rep(pa_plus(kOne), 3), rat(1, 64), m_lin(42, 5));
        const PochhammerSeries t20 =
            make_series(rep(pconst(kHalf), 3),
                        {pa_plus(kOne), pa_plus(kOne), p(rat(-2), rat(3, 2))}, kOne);
        const ClosedForm gpref = cf(2) / cf_pi() / cf_pow(rat(4), kOne) / cf_cospi(rat(2)) *
                                 poch_pow(kOne, 2) / (cf_poch(rat(1, 4)) * cf_poch(rat(3, 4)));
        RhsVariant v1{"(19)",
                      {{cf(32) * cf_a(),
                        make_series({pconst(kHalf), pconst(kHalf), pa_plus(kHalf), pa_plus(kHalf)},
                                    {pa_plus(kOne), pa_plus(kOne), p(rat(2), kOne), p(rat(2), kOne)},
                                    kOne, 4 * BiPoly::var_n() + 4 * BiPoly::var_k() + 1)}}};
        RhsVariant v2{"(20)", {{gpref, *d.aux_g}, {cf(512) * a_cube() * inv_4am1(), t20}}};
        RhsVariant v3{"(21)",
                      {{cf(32) / pi_sq() * cf_pow(rat(16), kOne) / cospi_pow(kOne, 2) /
                            cf_cospi(rat(2)) * poch_pow(kOne, 5) /
                            (poch_pow(kHalf, 3) * cf_poch(rat(1, 4)) * cf_poch(rat(3, 4))),
                        std::nullopt},
                       {cf(512) * a_cube() * inv_4am1(), t20},
                       {cf(256) / cf_pi() / cf_pow(rat(4), kOne) / cf_cospi(rat(2)) *
                            poch_pow(kOne, 2) / (cf_poch(rat(1, 4)) * cf_poch(rat(3, 4))) *
                            a_sq() * inv_2am1(),
                        aux_b2}}};
        d.variants = {v1, v2, v3};
        d.special_values = {{kHalf, cf(16) * pi_sq() / cf(3)}};
        d.derivatives = {cf(32) / pi_sq(), cf(512) / pi_sq() * ln2(),
                         cf(64) / (cf(3) * pi_sq()) *
                             (cf(384) * ln2() * ln2() - cf(7) * pi_sq())};
        d.catalan = CatalanLimit{cf(-2048) * cf_const(Constant::Catalan) / cf_pi(), rat(-512), t20,
                                 gpref};
        d.composition = Composition{"(21)", "(20)", 2, "(4)"};
        reg.push_back(std::move(d));
    }

    return reg;
}

} // namespace

const std::vector<IdentityDef>& registry() {
    static const std::vector<IdentityDef> reg = build_registry();
    return reg;
}

const IdentityDef& identity(int id) {
    for (const auto& d : registry())
        if (d.id == id) return d;
    throw DomainError("unknown identity id " + std::to_string(id));
}

const RhsVariant& IdentityDef::variant(const std::string& label) const {
    for (const auto& v : variants)
        if (v.label == label) return v;
    throw DomainError("identity " + std::to_string(id) + " has no variant " + label);
}

const std::vector<BoundaryForm>& boundary_forms() {
    static const std::vector<BoundaryForm> forms = [] {
        std::vector<BoundaryForm> v;
        // S(a) = 4/pi * 1/cos^2(pi a)
        v.push_back({"id1-pairB", cf(4) / cf_pi() / (cf_cospi(rat(1)) * cf_cospi(rat(1)))});
        return v;
    }();
    return forms;
}

const BoundaryForm* boundary_form_for(const std::string& pair_name) {
    for (const auto& f : boundary_forms())
        if (f.pair_name == pair_name) return &f;
    return nullptr;
}

std::vector<Rational> default_grid() {
    return {rat(1, 10), rat(1, 5), rat(3, 10), rat(2, 5)};
}

std::vector<Rational> verification_grid(const IdentityDef& def) {
    std::vector<Rational> grid = default_grid();
    for (const auto& sv : def.special_values)
        if (std::find(grid.begin(), grid.end(), sv.a) == grid.end()) grid.push_back(sv.a);
    return grid;
}

IdentityDef perturb_lhs_weight(const IdentityDef& def, size_t term_index) {
    IdentityDef out = def;
    const auto& terms = out.lhs.weight.terms();
    if (terms.empty()) throw DomainError("lhs weight has no terms to perturb");
    auto it = terms.begin();
    for (size_t i = 0; i < term_index % terms.size(); ++i) ++it;
    out.lhs.weight += BiPoly::monomial(rat(1), it->first.first, it->first.second);
    return out;
}

} // namespace wzs
