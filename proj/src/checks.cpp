#include "wzs/checks.hpp"

#include <cmath>

namespace wzs {

namespace {

BigFloat bipoly_at(const BiPoly& p, const BigFloat& n, const BigFloat& k, long wp) {
    BigFloat r(wp);
    for (const auto& [e, c] : p.terms()) {
        BigFloat t = BigFloat::of(c, wp);
        for (int i = 0; i < e.first; ++i) t = mul(t, n, wp);
        for (int i = 0; i < e.second; ++i) t = mul(t, k, wp);
        r = add(r, t, wp);
    }
    return r;
}

BigFloat ratfunc_at(const RatFunc& f, const BigFloat& n, const BigFloat& k, long wp) {
    const BigFloat den = bipoly_at(f.den(), n, k, wp);
    if (den.is_zero()) throw PoleError("rational multiplier pole at real point");
    return div(bipoly_at(f.num(), n, k, wp), den, wp);
}

SumResult sum_series(const PochhammerSeries& s, const Rational& a, long prec, const BigFloat& tol,
                     long max_terms) {
    if (auto issue = s.admissibility_issue(a))
        throw DomainError("inadmissible point a = " + a.get_str() + ": " + *issue);
    const BigFloat av = BigFloat::of(a, guarded(prec) + 32);
    if (s.is_linear()) return sum_linear(s, av, prec, tol, max_terms);
    return sum_algebraic(s, av, prec, tol, max_terms, a);
}

std::string q_str(const Rational& a) { return a.get_str(); }

} // namespace

CheckReport make_report(std::string kind, int id, std::string variant, std::string a_label,
                        const BigFloat& lhs, const BigFloat& rhs, const BigFloat& tol,
                        const BigFloat& lhs_err, const BigFloat& rhs_err, long terms) {
    CheckReport r;
    r.kind = std::move(kind);
    r.identity_id = id;
    r.variant = std::move(variant);
    r.a_label = std::move(a_label);
    r.lhs = lhs;
    r.rhs = rhs;
    const long wp = std::max(lhs.prec(), rhs.prec());
    r.abs_diff = abs(sub(lhs, rhs, wp));
    BigFloat scale = max(abs(lhs), abs(rhs));
    if (scale < BigFloat::parse("1e-2", 64)) scale = BigFloat::parse("1e-2", 64);
    r.rel_diff = div(r.abs_diff, scale, 64);
    r.tol = tol;
    r.lhs_err = lhs_err;
    r.rhs_err = rhs_err;
    r.terms = terms;
    r.pass = r.abs_diff <= add(mul(tol, scale, wp), add(lhs_err, rhs_err, wp), wp);
    return r;
}

SumResult eval_lhs(int id, const Rational& a, long prec, const BigFloat& tol, long max_terms) {
    return sum_series(identity(id).lhs, a, prec, tol, max_terms);
}

SumResult eval_g(int id, const Rational& a, long prec, const BigFloat& tol, long max_terms) {
    const auto& d = identity(id);
    if (!d.aux_g) throw DomainError("identity " + std::to_string(id) + " has no companion g");
    return sum_series(*d.aux_g, a, prec, tol, max_terms);
}

void require_admissible(int id, const std::string& variant, const Rational& a) {
    const auto& v = identity(id).variant(variant);
    if (auto issue = identity(id).lhs.admissibility_issue(a))
        throw DomainError("lhs inadmissible at a = " + q_str(a) + ": " + *issue);
    for (const auto& t : v.terms) {
        if (auto s = t.coeff.singularity_at(a))
            throw DomainError("variant " + variant + " singular at a = " + q_str(a) + ": " + *s);
        if (t.series) {
            if (auto issue = t.series->admissibility_issue(a))
                throw DomainError("variant " + variant + " inadmissible at a = " + q_str(a) +
                                  ": " + *issue);
        }
    }
}

SumResult eval_rhs(int id, const std::string& variant, const Rational& a, long prec,
                   const BigFloat& tol, long max_terms) {
    const auto& d = identity(id);
    const auto& v = d.variant(variant);
    require_admissible(id, variant, a);
    const long wp = guarded(prec) + 16;
    const BigFloat av = BigFloat::of(a, wp);
    SumResult out;
    out.value = BigFloat(wp);
    out.error_estimate = BigFloat(64);
    out.method = SumMethod::Direct;
    for (const auto& t : v.terms) {
        const BigFloat coeff = t.coeff.eval(av, wp);
        BigFloat term_value = coeff;
        if (t.series) {
            BigFloat scale = abs(coeff);
            if (scale < BigFloat::of(1, 64)) scale = BigFloat::of(1, 64);
            const BigFloat tol_i =
                div(tol, mul(scale, BigFloat::of(2 * static_cast<long>(v.terms.size()), 64), 64),
                    64);
            const SumResult s = sum_series(*t.series, a, prec, tol_i, max_terms);
            term_value = mul(coeff, s.value, wp);
            out.error_estimate =
                add(out.error_estimate, mul(abs(coeff), s.error_estimate, 64), 64);
            out.terms_used += s.terms_used;
            if (s.method == SumMethod::Accelerated) out.method = SumMethod::Accelerated;
        }
        out.value = add(out.value, term_value, wp);
    }
    out.value = out.value.round_to(prec);
    out.error_estimate = add(out.error_estimate, ulp(out.value) * 16, 64);
    return out;
}

CheckReport check_identity(int id, const std::string& variant, const Rational& a, long prec,
                           const BigFloat& rel_tol, long max_terms) {
    // Absolute budgets sized from the relative tolerance; values here are O(1..1e4).
    const BigFloat tol_abs = mul(rel_tol, BigFloat::parse("1e-2", 64), 64);
    const SumResult l = eval_lhs(id, a, prec, tol_abs, max_terms);
    const SumResult r = eval_rhs(id, variant, a, prec, tol_abs, max_terms);
    CheckReport rep = make_report("identity", id, variant, q_str(a), l.value, r.value, rel_tol,
                                  l.error_estimate, r.error_estimate,
                                  l.terms_used + r.terms_used);
    return rep;
}

std::vector<CheckReport> check_special_values(int id, long prec, const BigFloat& rel_tol) {
    const auto& d = identity(id);
    std::vector<CheckReport> out;
    const long wp = guarded(prec) + 16;
    for (const auto& sv : d.special_values) {
        const BigFloat tol_abs = mul(rel_tol, BigFloat::parse("1e-3", 64), 64);
        const SumResult l = eval_lhs(id, sv.a, prec, tol_abs);
        const BigFloat rhs = sv.value.eval(BigFloat::of(sv.a, wp), prec);
        out.push_back(make_report("special", id, "f(" + q_str(sv.a) + ")", q_str(sv.a), l.value,
                                  rhs, rel_tol, l.error_estimate, ulp(rhs) * 8, l.terms_used));
    }
    return out;
}

CheckReport check_derivative(int id, int order, const BigFloat& h, long prec,
                             const BigFloat& rel_tol) {
    if (order < 0 || order > 2) throw DomainError("derivative order must be 0, 1 or 2");
    const auto& d = identity(id);
    const double log2h = std::log2(std::abs(h.to_double()));
    const long wp = std::max({400L, prec + 4 * static_cast<long>(std::ceil(-log2h)), prec}) + 32;
    const BigFloat tol_abs = pow(BigFloat::of(2, 64), BigFloat::of(-(2 * wp) / 5, 64), 64);
    const auto f_at = [&](const Rational& shift_num, const BigFloat& hh) {
        // a = shift_num * hh as an exact rational offset of 0
        const BigFloat av = mul(BigFloat::of(shift_num, wp), hh, wp);
        // admissibility at tiny |a| holds for every lhs family
        return sum_linear(d.lhs, av, wp, tol_abs);
    };
    BigFloat value(wp);
    long terms = 0;
    std::string label;
    if (order == 0) {
        const SumResult r0 = eval_lhs(id, rat(0), prec, tol_abs);
        const BigFloat rhs = d.derivatives.f0.eval0(prec);
        CheckReport rep = make_report("derivative", id, "f(0)", "0", r0.value, rhs, rel_tol,
                                      r0.error_estimate, ulp(rhs) * 8, r0.terms_used);
        return rep;
    }
    const BigFloat hh = h.round_to(wp);
    const SumResult fm2 = f_at(rat(-2), hh), fm1 = f_at(rat(-1), hh), fp1 = f_at(rat(1), hh),
                    fp2 = f_at(rat(2), hh);
    terms = fm2.terms_used + fm1.terms_used + fp1.terms_used + fp2.terms_used;
    if (order == 1) {
        // (f(-2h) - 8 f(-h) + 8 f(h) - f(2h)) / (12 h)
        BigFloat num = sub(fm2.value, fp2.value, wp);
        num = add(num, mul(sub(fp1.value, fm1.value, wp), BigFloat::of(8, wp), wp), wp);
        value = div(num, hh * 12, wp);
        label = "f'(0)";
    } else {
        const SumResult f0 = f_at(rat(0), hh);
        terms += f0.terms_used;
        // (-f(2h) + 16 f(h) - 30 f(0) + 16 f(-h) - f(-2h)) / (12 h^2)
        BigFloat num = -add(fp2.value, fm2.value, wp);
        num = add(num, mul(add(fp1.value, fm1.value, wp), BigFloat::of(16, wp), wp), wp);
        num = sub(num, mul(f0.value, BigFloat::of(30, wp), wp), wp);
        value = div(num, mul(hh, hh * 12, wp), wp);
        label = "f''(0)";
    }
    const ClosedForm& cfm = order == 1 ? d.derivatives.f1 : d.derivatives.f2;
    const BigFloat rhs = cfm.eval0(prec);
    // Discretization is O(h^4); the dominating reported uncertainty is the
    // series tolerance amplified by the stencil division.
    BigFloat fd_err = div(tol_abs * 64, order == 1 ? hh : mul(hh, hh, wp), 64);
    CheckReport rep = make_report("derivative", id, label, "h=" + h.str(3),
                                  value.round_to(prec), rhs, rel_tol, fd_err, ulp(rhs) * 8, terms);
    return rep;
}

namespace {

// Polynomial extrapolation to 0 of (xs, ys), Neville scheme; err gets the
// difference between the last two tableau stages.
BigFloat neville_to_zero(const std::vector<BigFloat>& xs, std::vector<BigFloat> ys, long wp,
                         BigFloat& err) {
    const size_t n = xs.size();
    BigFloat prev = ys[0];
    for (size_t j = 1; j < n; ++j) {
        for (size_t i = 0; i + j < n; ++i) {
            // P_i = (x_{i+j} P_i - x_i P_{i+1}) / (x_{i+j} - x_i)
            ys[i] = div(sub(mul(xs[i + j], ys[i], wp), mul(xs[i], ys[i + 1], wp), wp),
                        sub(xs[i + j], xs[i], wp), wp);
        }
        if (j == n - 1) err = abs(sub(ys[0], prev, wp));
        prev = ys[0];
    }
    return ys[0];
}

} // namespace

CatalanReports check_catalan_limit(int id, long prec, const BigFloat& extrap_tol,
                                   const BigFloat& inner_tol) {
    const auto& d = identity(id);
    if (!d.catalan) throw DomainError("identity has no Catalan limit");
    const long wp = guarded(prec) + 64;
    const BigFloat closed = d.catalan->value.eval0(prec);

    // Route 1: bracket [f(a)/a^3 - pref(a) g(a)/a^3] at a = 2^-j, j = 4..10,
    // extrapolated polynomially to a = 0.
    std::vector<BigFloat> xs, ys;
    long terms = 0;
    for (int j = 4; j <= 10; ++j) {
        const Rational aq = rat(1, 1L << j);
        const BigFloat av = BigFloat::of(aq, wp);
        const BigFloat a3 = mul(mul(av, av, wp), av, wp);
        const BigFloat tol_abs = mul(BigFloat::parse("1e-12", 64), a3, 64);
        const SumResult f = eval_lhs(id, aq, wp, tol_abs);
        const SumResult g = eval_g(id, aq, wp, tol_abs);
        const BigFloat pref = d.catalan->g_prefactor.eval(av, wp);
        const BigFloat bracket = sub(f.value, mul(pref, g.value, wp), wp);
        xs.push_back(av);
        ys.push_back(div(bracket, a3, wp));
        terms += f.terms_used + g.terms_used;
    }
    BigFloat extrap_err(64);
    const BigFloat extrapolated = neville_to_zero(xs, ys, wp, extrap_err);
    CheckReport r1 = make_report("catalan", id, "extrapolated", "a->0", extrapolated.round_to(prec),
                                 closed, extrap_tol, extrap_err, ulp(closed) * 8, terms);

    // Route 2: inner-series value at a = 0 times the limit coefficient.
    const BigFloat tol_inner_abs = mul(inner_tol, BigFloat::parse("1e-2", 64), 64);
    const SumResult inner = sum_series(d.catalan->inner, rat(0), prec, tol_inner_abs, 100000);
    const BigFloat inner_value = mul(BigFloat::of(d.catalan->inner_coeff, prec), inner.value, prec);
    const BigFloat inner_err =
        mul(abs(BigFloat::of(d.catalan->inner_coeff, 64)), inner.error_estimate, 64);
    CheckReport r2 = make_report("catalan", id, "inner-series", "a=0", inner_value, closed,
                                 inner_tol, inner_err, ulp(closed) * 8, inner.terms_used);
    return {r1, r2};
}

namespace {

// One shifted-kernel column term: G_a(n,k) = B(n+a,k) RG(n+a,k).
BigFloat shifted_G(const WZPair& pair, long n, const BigFloat& a, long k, long wp) {
    const BigFloat b = pair.B.eval_real(n, a, k, wp);
    const BigFloat na = a + n;
    return mul(b, ratfunc_at(pair.RG, na, BigFloat::of(k, wp), wp), wp);
}

BigFloat shifted_F(const WZPair& pair, long n, const BigFloat& a, long k, long wp) {
    const BigFloat b = pair.B.eval_real(n, a, k, wp);
    const BigFloat na = a + n;
    return mul(b, ratfunc_at(pair.RF, na, BigFloat::of(k, wp), wp), wp);
}

// sum_n G_a(n,k), geometric in n.
SumResult column_sum(const WZPair& pair, const BigFloat& a, long k, long prec, const BigFloat& tol) {
    const double cap =
        std::min(0.97, pair.B.ratio_limit(HyperTerm::Direction::N).get_d() * 1.125 + 0.01);
    return sum_terms_geometric(
        [&](long n, long wp) { return shifted_G(pair, n, a, k, wp); }, cap, prec, tol);
}

} // namespace

CheckReport check_telescoping(const WZPair& pair, const Rational& a, long K, long prec,
                              const BigFloat& tol) {
    if (K < 0) throw DomainError("telescoping depth K must be >= 0");
    if (pair.B.base_n() < 0)
        throw DomainError("telescoping with a real shift needs a positive n-base");
    const long wp = guarded(prec) + 32;
    const BigFloat av = BigFloat::of(a, wp);
    const BigFloat tol_abs = div(tol, BigFloat::of(8, 64), 64);
    const SumResult lhs = column_sum(pair, av, 0, prec, tol_abs);
    const SumResult right_col = column_sum(pair, av, K, prec, tol_abs);
    BigFloat fsum(wp);
    for (long k = 0; k < K; ++k) fsum = add(fsum, shifted_F(pair, 0, av, k, wp), wp);
    const BigFloat rhs = add(right_col.value.round_to(wp), fsum, wp);
    CheckReport rep = make_report("telescoping", pair.identity_id, pair.name,
                                  q_str(a) + ", K=" + std::to_string(K), lhs.value,
                                  rhs.round_to(prec), tol,
                                  lhs.error_estimate, right_col.error_estimate,
                                  lhs.terms_used + right_col.terms_used + K);
    return rep;
}

namespace {

// Smooth continuation in k of F_a(0,k) for the second certificate of
// identity 1, with the alternating sign absorbed through the reflection
// (-1)^k Gamma(a-k+1/2) = pi / (cos(pi a) Gamma(k+1/2-a)).
BigFloat id1b_F_column_real(const Rational& a, const BigFloat& kappa, long wp) {
    const BigFloat av = BigFloat::of(a, wp);
    const BigFloat one = BigFloat::of(1, wp);
    const BigFloat two_a = av * 2;
    // log magnitude pass
    const double kd = kappa.to_double(), ad = a.get_d();
    const double mag = std::abs(std::lgamma(2 * kd + 1)) + std::abs(std::lgamma(2 * ad + 2 * kd + 1)) +
                       std::abs(std::lgamma(kd + 0.5 - ad)) + std::abs(std::lgamma(kd + 1)) +
                       2 * std::abs(std::lgamma(ad + kd + 1)) + 8 * (kd + 1) + 16;
    const long gw = wp + 32 + static_cast<long>(std::log2(mag + 4));
    const BigFloat kk = kappa.round_to(gw);
    const BigFloat aw = av.round_to(gw);
    BigFloat logsum(gw);
    auto lg = [&](const BigFloat& x) { return lngamma(x, gw); };
    logsum = add(logsum, lg(add(kk * 2, one.round_to(gw), gw)), gw);                // (2k)!
    logsum = add(logsum, lg(add(add(kk * 2, aw * 2, gw), one.round_to(gw), gw)), gw); // (2a+2k)!
    logsum = add(logsum, lg(aw * 2 + 1) * 2, gw);                                   // (2a)!^2
    logsum = sub(logsum, lg(add(kk, BigFloat::of(rat(1, 2), gw), gw) - aw), gw);    // 1/G(k+1/2-a)
    logsum = sub(logsum, lg(kk + 1), gw);                                           // 1/k!
    logsum = sub(logsum, lg(add(aw, kk, gw) + 1) * 2, gw);                          // 1/(a+k)!^2
    logsum = sub(logsum, lg(aw + BigFloat::of(rat(1, 2), gw)), gw);                 // 1/(a-1/2)!
    logsum = sub(logsum, lg(aw + 1) * 4, gw);                                       // 1/a!^4
    // bases: 2^-8a 2^-4k
    const BigFloat ln2v = ln(BigFloat::of(2, gw), gw);
    logsum = sub(logsum, mul(add(aw * 8, kk * 4, gw), ln2v, gw), gw);
    BigFloat v = exp(logsum, gw);
    // pi / cos(pi a) from the reflection
    v = mul(v, div(constant(Constant::Pi, gw), cos_pi(aw, gw), gw), gw);
    // multiplier 16 a^2 / (2a - 2k - 1)
    const BigFloat mult =
        div(mul(av.round_to(gw) * 16, av.round_to(gw), gw), sub(two_a.round_to(gw), kk * 2 + 1, gw), gw);
    return mul(v, mult, wp);
}

// Least-squares fit of V(k) = S + k^theta (b0 + b1/k + ... + b_{M-1}/k^{M-1});
// returns S.
BigFloat fit_boundary(const std::vector<long>& ks, const std::vector<BigFloat>& vs,
                      const BigFloat& theta, int M, long wp) {
    const size_t rows = ks.size();
    const size_t cols = static_cast<size_t>(M) + 1;
    std::vector<std::vector<BigFloat>> A(rows, std::vector<BigFloat>(cols, BigFloat(wp)));
    for (size_t r = 0; r < rows; ++r) {
        const BigFloat kf = BigFloat::of(ks[r], wp);
        A[r][0] = BigFloat::of(1, wp);
        BigFloat base = pow(kf, theta, wp);
        for (size_t c = 1; c < cols; ++c) {
            A[r][c] = base;
            base = div(base, kf, wp);
        }
    }
    // normal equations
    std::vector<std::vector<BigFloat>> N(cols, std::vector<BigFloat>(cols, BigFloat(wp)));
    std::vector<BigFloat> rhs(cols, BigFloat(wp));
    for (size_t i = 0; i < cols; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            BigFloat acc(wp);
            for (size_t r = 0; r < rows; ++r) acc = add(acc, mul(A[r][i], A[r][j], wp), wp);
            N[i][j] = acc;
        }
        BigFloat acc(wp);
        for (size_t r = 0; r < rows; ++r) acc = add(acc, mul(A[r][i], vs[r], wp), wp);
        rhs[i] = acc;
    }
    // gaussian elimination with partial pivoting
    for (size_t c = 0; c < cols; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < cols; ++r)
            if (abs(N[r][c]) > abs(N[piv][c])) piv = r;
        std::swap(N[c], N[piv]);
        std::swap(rhs[c], rhs[piv]);
        if (N[c][c].is_zero()) throw ConvergenceError("boundary fit is singular");
        for (size_t r = c + 1; r < cols; ++r) {
            const BigFloat f = div(N[r][c], N[c][c], wp);
            for (size_t cc = c; cc < cols; ++cc) N[r][cc] = sub(N[r][cc], mul(f, N[c][cc], wp), wp);
            rhs[r] = sub(rhs[r], mul(f, rhs[c], wp), wp);
        }
    }
    std::vector<BigFloat> x(cols, BigFloat(wp));
    for (size_t r = cols; r-- > 0;) {
        BigFloat acc = rhs[r];
        for (size_t cc = r + 1; cc < cols; ++cc) acc = sub(acc, mul(N[r][cc], x[cc], wp), wp);
        x[r] = div(acc, N[r][r], wp);
    }
    return x[0];
}

} // namespace

BoundaryReports check_boundary_limit(const WZPair& pair, const Rational& a, long prec,
                                     const BigFloat& column_tol, const BigFloat& finite_tol) {
    const BoundaryForm* form = boundary_form_for(pair.name);
    if (!form)
        throw DomainError("no boundary closed form registered for " + pair.name);
    const long wp = guarded(prec) + 64;
    const BigFloat av = BigFloat::of(a, wp);
    const BigFloat closed = form->s_of_a.eval(av, prec);

    // Column route: column sums at k in {64,128,256} plus small offsets,
    // fitted against S + k^theta (b0 + b1/k + ...), theta = a - 1/2.
    std::vector<long> ks;
    for (long base : {64L, 128L, 256L})
        for (long off = 0; off < 4; ++off) ks.push_back(base + off);
    std::vector<BigFloat> vs;
    long terms = 0;
    const BigFloat col_tol_abs = BigFloat::parse("1e-30", 64);
    for (long k : ks) {
        const SumResult c = column_sum(pair, av, k, wp, col_tol_abs);
        vs.push_back(c.value.round_to(wp));
        terms += c.terms_used;
    }
    const BigFloat theta = BigFloat::of(Rational(a - rat(1, 2)), wp);
    const BigFloat s5 = fit_boundary(ks, vs, theta, 5, wp);
    const BigFloat s6 = fit_boundary(ks, vs, theta, 6, wp);
    const BigFloat fit_err = abs(sub(s6, s5, wp));
    CheckReport r1 = make_report("boundary", pair.identity_id, pair.name + "/columns",
                                 q_str(a), s6.round_to(prec), closed, column_tol, fit_err,
                                 ulp(closed) * 8, terms);

    // Finite route: S(a) = sum_n G_a(n,0) - sum_k F_a(0,k).
    const BigFloat fin_tol_abs = div(finite_tol, BigFloat::of(16, 64), 64);
    const SumResult g0 = column_sum(pair, av, 0, prec, fin_tol_abs);
    SumResult fsum;
    if (a == 0) {
        // F carries an a^2 factor; the column vanishes identically.
        fsum.value = BigFloat(prec);
        fsum.error_estimate = BigFloat(64);
    } else {
        TermSequence seq;
        seq.at = [&](long k, long wpp) { return shifted_F(pair, 0, av, k, wpp); };
        seq.at_real = [&](const BigFloat& kappa, long wpp) {
            return id1b_F_column_real(a, kappa, wpp);
        };
        seq.decay_s = Rational(rat(3, 2) - a);
        fsum = sum_algebraic_terms(seq, prec, fin_tol_abs, 100000);
    }
    const BigFloat s_fin = sub(g0.value, fsum.value, prec);
    CheckReport r2 = make_report("boundary", pair.identity_id, pair.name + "/finite", q_str(a),
                                 s_fin, closed, finite_tol,
                                 add(g0.error_estimate, fsum.error_estimate, 64), ulp(closed) * 8,
                                 g0.terms_used + fsum.terms_used);
    return {r1, r2};
}

CheckReport check_composition(int id, const Rational& a, long prec, const BigFloat& rel_tol) {
    const auto& d = identity(id);
    if (!d.composition) throw DomainError("identity has no composition structure");
    const auto& comp = *d.composition;
    const BigFloat tol_abs = mul(rel_tol, BigFloat::parse("1e-2", 64), 64);
    const SumResult direct = eval_rhs(id, comp.composed, a, prec, tol_abs);

    // base variant with its g-series term replaced by the g-identity variant
    const auto& base = d.variant(comp.base);
    const long wp = guarded(prec) + 16;
    const BigFloat av = BigFloat::of(a, wp);
    BigFloat substituted(wp);
    BigFloat err(64);
    long terms = 0;
    bool replaced = false;
    for (const auto& t : base.terms) {
        const BigFloat coeff = t.coeff.eval(av, wp);
        if (t.series && d.aux_g && *t.series == *d.aux_g && !replaced) {
            const SumResult g_sub = eval_rhs(comp.g_identity, comp.g_variant, a, prec, tol_abs);
            substituted = add(substituted, mul(coeff, g_sub.value, wp), wp);
            err = add(err, mul(abs(coeff), g_sub.error_estimate, 64), 64);
            terms += g_sub.terms_used;
            replaced = true;
            continue;
        }
        if (t.series) {
            const SumResult s = sum_series(*t.series, a, prec, tol_abs, 100000);
            substituted = add(substituted, mul(coeff, s.value, wp), wp);
            err = add(err, mul(abs(coeff), s.error_estimate, 64), 64);
            terms += s.terms_used;
        } else {
            substituted = add(substituted, coeff, wp);
        }
    }
    if (!replaced) throw Error("composition base variant has no g-series term");
    return make_report("composition", id, comp.composed + "=" + comp.base + "o" + comp.g_variant,
                       q_str(a), direct.value, substituted.round_to(prec), rel_tol,
                       direct.error_estimate, err, direct.terms_used + terms);
}

} // namespace wzs
