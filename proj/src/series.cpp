#include "wzs/series.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace wzs {

namespace {

// ---------------------------------------------------------------- helpers

struct WeightEval {
    // weight coefficients by power of n, with a substituted
    std::vector<BigFloat> coef;
    long wp = 64;

    WeightEval() = default;
    WeightEval(const BiPoly& w, const BigFloat& a, long wp_) : wp(wp_) {
        const int d = w.deg_n();
        coef.assign(static_cast<size_t>(d) + 1, BigFloat(wp));
        for (const auto& [e, c] : w.terms()) {
            // e.first = power of n, e.second = power of a
            BigFloat t = BigFloat::of(c, wp);
            for (int i = 0; i < e.second; ++i) t = mul(t, a, wp);
            coef[static_cast<size_t>(e.first)] = add(coef[static_cast<size_t>(e.first)], t, wp);
        }
    }

    int degree() const { return static_cast<int>(coef.size()) - 1; }

    bool coefs_nonnegative() const {
        for (const auto& c : coef)
            if (c.is_negative()) return false;
        return true;
    }

    BigFloat at(const BigFloat& n) const {
        BigFloat r(wp);
        for (size_t i = coef.size(); i-- > 0;) r = add(mul(r, n, wp), coef[i], wp);
        return r;
    }
    BigFloat at(long n) const { return at(BigFloat::of(n, wp)); }
};

// Sequential term generator: kernel(n) = z^n prod (p_i)_n / prod (q_j)_n,
// term(n) = kernel(n) * weight(n).
struct TermStream {
    std::vector<BigFloat> p, q;
    BigFloat z;
    WeightEval w;
    long wp;
    long n = 0;
    BigFloat kernel;

    TermStream(const PochhammerSeries& s, const BigFloat& a, long wp_)
        : z(BigFloat::of(s.ratio_z, wp_)), w(s.weight, a.round_to(wp_), wp_), wp(wp_),
          kernel(BigFloat::of(1, wp_)) {
        for (const auto& x : s.num_params) p.push_back(x.at(a, wp));
        for (const auto& x : s.den_params) q.push_back(x.at(a, wp));
    }

    BigFloat term() const { return mul(kernel, w.at(n), wp); }

    void advance() {
        BigFloat r = z;
        for (const auto& x : p) r = mul(r, add(x, BigFloat::of(n, wp), wp), wp);
        for (const auto& x : q) r = div(r, add(x, BigFloat::of(n, wp), wp), wp);
        kernel = mul(kernel, r, wp);
        ++n;
    }
};

const Rational kB2[] = {rat(1, 12), rat(-1, 720), rat(1, 30240), rat(-1, 1209600)};

// Exact central-difference weights on offsets -5..5: sum_i w_i f(i h) =
// f^(d)(0) h^d + O(h^11). Solved once over Q.
const std::vector<std::vector<Rational>>& fd_weights() {
    static const std::vector<std::vector<Rational>> table = [] {
        constexpr int m = 5, dim = 2 * m + 1;
        // M[j][i] = i^j, unknowns w_i with sum_i w_i i^j = d! delta_{jd}
        std::vector<std::vector<Rational>> rows(dim, std::vector<Rational>(dim));
        for (int j = 0; j < dim; ++j)
            for (int i = -m; i <= m; ++i) rows[j][i + m] = pow_rat(rat(i), j);
        std::vector<std::vector<Rational>> out;
        for (int d : {1, 3, 5, 7}) {
            auto a = rows;
            std::vector<Rational> rhs(dim, Rational(0));
            rhs[static_cast<size_t>(d)] = Rational(factorial(static_cast<unsigned long>(d)));
            // Gaussian elimination with partial pivot on exact rationals.
            std::vector<int> perm(dim);
            for (int c = 0; c < dim; ++c) {
                int piv = -1;
                for (int r = c; r < dim; ++r)
                    if (a[r][c] != 0) {
                        piv = r;
                        break;
                    }
                std::swap(a[c], a[piv]);
                std::swap(rhs[c], rhs[piv]);
                for (int r = c + 1; r < dim; ++r) {
                    if (a[r][c] == 0) continue;
                    const Rational f = Rational(a[r][c] / a[c][c]);
                    for (int cc = c; cc < dim; ++cc) a[r][cc] -= f * a[c][cc];
                    rhs[r] -= f * rhs[c];
                }
            }
            std::vector<Rational> w(dim);
            for (int r = dim - 1; r >= 0; --r) {
                Rational acc = rhs[r];
                for (int cc = r + 1; cc < dim; ++cc) acc -= a[r][cc] * w[cc];
                w[r] = Rational(acc / a[r][r]);
            }
            out.push_back(std::move(w));
        }
        return out;
    }();
    return table;
}

} // namespace

// ----------------------------------------------------- PochhammerSeries

bool PochhammerSeries::is_linear() const {
    return abs(Rational(ratio_z)) < 1;
}

AffineInA PochhammerSeries::decay_exponent() const {
    Rational c(0), o(weight.deg_n());
    for (const auto& x : num_params) {
        c += x.coef;
        o += x.offset;
    }
    for (const auto& x : den_params) {
        c -= x.coef;
        o -= x.offset;
    }
    return {c, o};
}

std::optional<std::string> PochhammerSeries::admissibility_issue(const Rational& a) const {
    for (const auto& x : den_params)
        if (is_nonpositive_integer(x.at(a)))
            return "denominator parameter " + x.at(a).get_str() + " is a non-positive integer";
    const Rational az = abs(ratio_z);
    if (az > 1) return "geometric ratio exceeds 1";
    if (az == 1) {
        if (ratio_z < 0) return "oscillatory unit ratio is not supported";
        const Rational c = decay_exponent().at(a);
        if (c >= -1) return "decay exponent " + c.get_str() + " is not below -1";
    }
    return std::nullopt;
}

BigFloat PochhammerSeries::term(long n, const BigFloat& a, long wp) const {
    TermStream st(*this, a, wp);
    for (long i = 0; i < n; ++i) st.advance();
    return st.term();
}

BigFloat PochhammerSeries::term_real(const BigFloat& x, const BigFloat& a, long wp) const {
    if (ratio_z <= 0) throw DomainError("real-argument term needs a positive ratio");
    // Size the log magnitudes to pick the internal guard.
    double mag = 4;
    {
        const double xd = x.to_double(), ad = a.to_double();
        for (const auto& p : num_params) mag += std::abs(std::lgamma(p.coef.get_d() * ad + p.offset.get_d() + xd));
        for (const auto& q : den_params) mag += std::abs(std::lgamma(q.coef.get_d() * ad + q.offset.get_d() + xd));
        mag += std::abs(xd * std::log(std::abs(ratio_z.get_d())));
    }
    const long gw = wp + 32 + static_cast<long>(std::log2(mag));
    BigFloat logsum(gw);
    for (const auto& p : num_params) {
        const BigFloat base = p.at(a.round_to(gw), gw);
        logsum = add(logsum, sub(lngamma(add(base, x, gw), gw), lngamma(base, gw), gw), gw);
    }
    for (const auto& q : den_params) {
        const BigFloat base = q.at(a.round_to(gw), gw);
        logsum = sub(logsum, sub(lngamma(add(base, x, gw), gw), lngamma(base, gw), gw), gw);
    }
    if (ratio_z != 1) logsum = add(logsum, mul(x, ln(BigFloat::of(ratio_z, gw), gw), gw), gw);
    const WeightEval w(weight, a.round_to(gw), gw);
    return mul(exp(logsum, gw), w.at(x.round_to(gw)), wp);
}

// ------------------------------------------------------------ pochhammer

BigFloat pochhammer(const BigFloat& x, long n, long prec) {
    if (n < 0) throw DomainError("pochhammer needs n >= 0");
    const long wp = guarded(prec);
    BigFloat r = BigFloat::of(1, wp);
    const BigFloat xx = x.round_to(wp);
    for (long i = 0; i < n; ++i) r = mul(r, xx + i, wp);
    return r.round_to(prec);
}

// ------------------------------------------------------------ sum_linear

SumResult sum_linear(const PochhammerSeries& s, const BigFloat& a, long prec, const BigFloat& tol,
                     long max_terms, long block_size) {
    if (!s.is_linear()) throw DomainError("sum_linear requires |z| < 1");
    if (s.num_params.size() != s.den_params.size())
        throw DomainError("sum_linear requires balanced parameter lists");
    const long wp = guarded(prec) + 16;
    TermStream st(s, a.round_to(wp), wp);
    if (!st.w.coefs_nonnegative())
        throw DomainError("weight polynomial with negative coefficients is unsupported");
    const BigFloat az = abs(BigFloat::of(s.ratio_z, wp));
    const int wdeg = st.w.degree();

    // burn-in: all parameter shifts positive
    long burn = 8;
    for (const auto& v : st.p)
        if (v.is_negative()) burn = std::max(burn, 2 - v.to_long());
    for (const auto& v : st.q)
        if (v.is_negative()) burn = std::max(burn, 2 - v.to_long());

    BigFloat sum(wp), block(wp);
    std::vector<BigFloat> blocks;
    const BigFloat one = BigFloat::of(1, wp);
    SumResult out;
    for (long n = 0;; ++n) {
        if (n >= max_terms)
            throw ConvergenceError("tolerance unachievable within max_terms (linear series)");
        const BigFloat t = st.term();
        if (block_size > 0) {
            block = add(block, t, wp);
            if ((n + 1) % block_size == 0) {
                blocks.push_back(block);
                block = BigFloat(wp);
            }
        } else {
            sum = add(sum, t, wp);
        }
        st.advance(); // kernel now at n+1

        if (n < burn) continue;
        // Sup bound on the term ratio over indices > n: each pochhammer
        // factor quotient is monotone toward 1, the weight ratio is bounded
        // by (1+1/(n+1))^deg for nonnegative coefficients.
        BigFloat ratio_bound = az;
        for (size_t i = 0; i < st.p.size(); ++i) {
            BigFloat f = div(st.p[i] + (n + 1), st.q[i] + (n + 1), wp);
            if (f < one) f = one;
            ratio_bound = mul(ratio_bound, f, wp);
        }
        if (wdeg > 0) {
            BigFloat wf = one + div(one, BigFloat::of(n + 1, wp), wp);
            for (int i = 0; i < wdeg; ++i) ratio_bound = mul(ratio_bound, wf, wp);
        }
        if (ratio_bound >= one) continue;
        const BigFloat next = abs(st.term());
        const BigFloat bound = div(next, sub(one, ratio_bound, wp), wp);
        if (bound <= tol) {
            out.error_estimate = bound;
            out.terms_used = n + 1;
            break;
        }
    }
    if (block_size > 0) {
        blocks.push_back(block);
        BigFloat acc(wp);
        for (const auto& b : blocks) acc = add(acc, b, wp);
        sum = acc;
    }
    out.value = sum.round_to(prec);
    out.error_estimate = add(out.error_estimate, ulp(sum) * (out.terms_used + 8), 64);
    out.method = SumMethod::Direct;
    return out;
}

// --------------------------------------------------------------- levin u

LevinResult levin_u(const std::function<BigFloat(long, long)>& term, long wp, const BigFloat& tol,
                    long max_k) {
    const long beta = 1;
    std::vector<BigFloat> numer, denom;
    BigFloat s(wp);
    BigFloat est(wp), prev1(wp), prev2(wp);
    BigFloat stab = BigFloat::parse("1e400", 64);
    LevinResult out;
    for (long k = 0; k < max_k; ++k) {
        const BigFloat t = term(k, wp);
        s = add(s, t, wp);
        if (t.is_zero()) {
            out.value = s;
            out.stabilization = BigFloat(wp);
            out.terms = k + 1;
            return out;
        }
        const BigFloat omega = t * (beta + k);
        numer.push_back(div(s, omega, wp));
        denom.push_back(div(BigFloat::of(1, wp), omega, wp));
        for (long m = k - 1; m >= 0; --m) {
            const long j = k - 1 - m;
            // c = (beta+m) (beta+m+j)^(j-1) / (beta+m+j+1)^j; equal to 1 at j=0
            BigFloat c = BigFloat::of(1, wp);
            if (j > 0) {
                BigFloat t1(wp), t2(wp);
                mpfr_ui_pow_ui(t1.raw(), static_cast<unsigned long>(beta + m + j),
                               static_cast<unsigned long>(j - 1), MPFR_RNDN);
                mpfr_ui_pow_ui(t2.raw(), static_cast<unsigned long>(beta + m + j + 1),
                               static_cast<unsigned long>(j), MPFR_RNDN);
                c = div(mul(BigFloat::of(beta + m, wp), t1, wp), t2, wp);
            }
            const size_t um = static_cast<size_t>(m);
            numer[um] = sub(numer[um + 1], mul(c, numer[um], wp), wp);
            denom[um] = sub(denom[um + 1], mul(c, denom[um], wp), wp);
        }
        if (denom[0].is_zero()) continue;
        prev2 = prev1;
        prev1 = est;
        est = div(numer[0], denom[0], wp);
        if (k >= 10) {
            const BigFloat d1 = abs(sub(est, prev1, wp));
            const BigFloat d2 = abs(sub(est, prev2, wp));
            stab = max(d1, d2);
            if (stab <= div(tol, BigFloat::of(4, wp), wp)) {
                out.value = est;
                out.stabilization = stab;
                out.terms = k + 1;
                return out;
            }
        }
    }
    out.value = est;
    out.stabilization = stab;
    out.terms = max_k;
    return out;
}

// ------------------------------------------------------- gauss-legendre

namespace {
std::mutex g_gl_mutex;
std::map<std::pair<int, long>, std::vector<std::pair<BigFloat, BigFloat>>> g_gl_cache;
} // namespace

const std::vector<std::pair<BigFloat, BigFloat>>& gauss_legendre_01(int count, long prec) {
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find({count, prec});
    if (it != g_gl_cache.end()) return it->second;

    const long wp = prec + 64;
    std::vector<std::pair<BigFloat, BigFloat>> nodes;
    const BigFloat one = BigFloat::of(1, wp);
    for (int i = 0; i < count; ++i) {
        // Chebyshev-style seed, then Newton on P_count.
        BigFloat x(wp);
        {
            const double seed = std::cos(M_PI * (i + 0.75) / (count + 0.5));
            mpfr_set_d(x.raw(), seed, MPFR_RNDN);
        }
        BigFloat dp(wp);
        const long iters = static_cast<long>(std::log2(static_cast<double>(wp))) + 3;
        for (long it2 = 0; it2 < iters; ++it2) {
            // evaluate P_n and P_n' by the three-term recurrence
            BigFloat p0 = one, p1 = x;
            for (int j = 2; j <= count; ++j) {
                const BigFloat p2 =
                    div(sub(mul(x * (2 * j - 1), p1, wp), p0 * (j - 1), wp), BigFloat::of(j, wp), wp);
                p0 = p1;
                p1 = p2;
            }
            // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
            dp = div(mul(BigFloat::of(count, wp), sub(mul(x, p1, wp), p0, wp), wp),
                     sub(mul(x, x, wp), one, wp), wp);
            x = sub(x, div(p1, dp, wp), wp);
        }
        // weight on [-1,1]: 2 / ((1-x^2) P_n'(x)^2); halved for [0,1]
        const BigFloat w =
            div(BigFloat::of(1, wp), mul(sub(one, mul(x, x, wp), wp), mul(dp, dp, wp), wp), wp);
        nodes.emplace_back(div(add(x, one, wp), BigFloat::of(2, wp), prec), w.round_to(prec));
    }
    auto [pos, ok] = g_gl_cache.emplace(std::make_pair(count, prec), std::move(nodes));
    return pos->second;
}

// -------------------------------------------- direct + integral tail route

namespace {

struct EmRoute {
    BigFloat value;
    BigFloat err;
    long terms;
};

// sum_{n=0}^inf at(n) = sum_{n<N} at(n) + integral_N^inf at_real
//                      + at_real(N)/2 - sum B_{2m}/(2m)! f^(2m-1)(N)
EmRoute em_direct_route(const std::function<BigFloat(long, long)>& at,
                        const std::function<BigFloat(const BigFloat&, long)>& at_real,
                        const Rational& decay_s, long wp, long N) {
    EmRoute out{BigFloat(wp), BigFloat(wp), N};
    BigFloat partial(wp);
    for (long n = 0; n < N; ++n) partial = add(partial, at(n, wp), wp);

    // Integral: substitute x = N u^-m with m the denominator of s-1, making
    // the integrand smooth in u on (0,1]; g(u) = f(N u^-m) m N u^-(m+1).
    const Rational sm1 = decay_s - 1;
    if (sm1 <= 0) throw ConvergenceError("non-convergent series (decay exponent <= 1)");
    long m = static_cast<long>(sm1.get_den().get_si());
    if (m < 1 || m > 64) m = std::max(1L, static_cast<long>(std::ceil(1.0 / sm1.get_d())) + 1);
    const BigFloat bigN = BigFloat::of(N, wp);
    const auto integrand = [&](const BigFloat& u) {
        BigFloat x = bigN;
        BigFloat upow = BigFloat::of(1, wp);
        for (long i = 0; i < m; ++i) upow = mul(upow, u, wp);
        x = div(x, upow, wp);
        const BigFloat fx = at_real(x, wp);
        return div(mul(fx * m, x, wp), u, wp); // f(x) m N u^-m-1 = f(x) m x / u
    };
    const auto quad = [&](int ng) {
        BigFloat acc(wp);
        for (const auto& [u, w] : gauss_legendre_01(ng, wp))
            acc = add(acc, mul(w, integrand(u), wp), wp);
        return acc;
    };
    const BigFloat integral = quad(96);
    const BigFloat gl_err = abs(sub(integral, quad(64), wp));

    // Euler-Maclaurin corrections at N via high-precision central differences.
    const long hl = 32; // h = 2^-32
    BigFloat h(wp);
    mpfr_set_ui_2exp(h.raw(), 1, -hl, MPFR_RNDN);
    const long fd_wp = wp + 8 * hl;
    std::vector<BigFloat> fvals;
    for (int i = -5; i <= 5; ++i) {
        BigFloat xi = BigFloat::of(N, fd_wp);
        BigFloat ih(fd_wp);
        mpfr_set_si_2exp(ih.raw(), i, -hl, MPFR_RNDN);
        fvals.push_back(at_real(add(xi, ih, fd_wp), fd_wp));
    }
    BigFloat tail = add(integral, div(fvals[5], BigFloat::of(2, wp), wp), wp);
    const auto& fdw = fd_weights();
    BigFloat last_corr(wp);
    for (size_t di = 0; di < 4; ++di) {
        const long d = 2 * static_cast<long>(di) + 1;
        BigFloat deriv(fd_wp);
        for (int i = -5; i <= 5; ++i) {
            const Rational& wgt = fdw[di][static_cast<size_t>(i + 5)];
            if (wgt == 0) continue;
            deriv = add(deriv, mul(BigFloat::of(wgt, fd_wp), fvals[static_cast<size_t>(i + 5)], fd_wp), fd_wp);
        }
        // divide by h^d, i.e. shift by d*hl bits
        mpfr_mul_2exp(deriv.raw(), deriv.raw(), static_cast<unsigned long>(d * hl), MPFR_RNDN);
        last_corr = mul(BigFloat::of(kB2[di], wp), deriv.round_to(wp), wp);
        tail = sub(tail, last_corr, wp);
    }

    out.value = add(partial, tail, wp);
    out.err = add(gl_err * 4, div(abs(last_corr), BigFloat::of(1000, wp), wp), wp);
    out.err = add(out.err, ulp(out.value) * (N + 256), 64);
    return out;
}

SumResult algebraic_dual_route(const std::function<BigFloat(long, long)>& at,
                               const std::function<BigFloat(const BigFloat&, long)>& at_real,
                               const Rational& decay_s, long prec, const BigFloat& tol,
                               long max_terms) {
    const long wp = 2 * prec + 160;
    const long max_k = std::min<long>(max_terms, 320);
    const LevinResult lev = levin_u(at, wp, tol, max_k);

    const long N = std::max<long>(64, std::min<long>(max_terms, std::max<long>(1500, 2 * lev.terms)));
    const EmRoute em = em_direct_route(at, at_real, decay_s, wp, N);

    const BigFloat disagreement = abs(sub(lev.value, em.value, wp));
    const BigFloat allowance = add(mul(tol, BigFloat::of(2, wp), wp), em.err * 4, wp);
    if (disagreement > allowance)
        throw ConvergenceError("acceleration failed: transform and direct routes disagree (" +
                               disagreement.str(8) + " vs allowance " + allowance.str(8) + ")");

    SumResult out;
    out.value = lev.value.round_to(prec);
    out.error_estimate = max(disagreement, lev.stabilization).round_to(64);
    out.terms_used = lev.terms + em.terms;
    out.method = SumMethod::Accelerated;
    return out;
}

} // namespace

SumResult sum_algebraic(const PochhammerSeries& s, const BigFloat& a, long prec,
                        const BigFloat& tol, long max_terms,
                        const std::optional<Rational>& a_exact) {
    if (abs(Rational(s.ratio_z)) != 1 || s.ratio_z < 0)
        throw DomainError("sum_algebraic requires ratio z = 1");
    const AffineInA cexp = s.decay_exponent();
    Rational s_exact;
    if (a_exact) {
        const Rational c = cexp.at(*a_exact);
        if (c >= -1) throw ConvergenceError("non-convergent series (decay exponent >= -1)");
        s_exact = -c;
    } else {
        const double c = cexp.coef.get_d() * a.to_double() + cexp.offset.get_d();
        if (c >= -1) throw ConvergenceError("non-convergent series (decay exponent >= -1)");
        // nearby rational exponent; only the integral substitution uses it
        s_exact = rat(static_cast<long>(std::llround(-c * 16)), 16);
    }
    const long wp_hint = 2 * prec + 160;
    const BigFloat aw = a.round_to(wp_hint);
    // Sequential use dominates; the stream is rebuilt when access rewinds.
    auto stream = std::make_shared<std::unique_ptr<TermStream>>();
    const auto at = [&s, aw, stream](long n, long wp) {
        auto& sp = *stream;
        if (!sp || sp->wp != wp || sp->n > n)
            sp = std::make_unique<TermStream>(s, aw.round_to(wp), wp);
        while (sp->n < n) sp->advance();
        return sp->term();
    };
    const auto at_real = [&s, aw](const BigFloat& x, long wp) {
        return s.term_real(x, aw.round_to(wp), wp);
    };
    return algebraic_dual_route(at, at_real, s_exact, prec, tol, max_terms);
}

SumResult sum_algebraic_terms(const TermSequence& t, long prec, const BigFloat& tol,
                              long max_terms) {
    return algebraic_dual_route(t.at, t.at_real, t.decay_s, prec, tol, max_terms);
}

SumResult sum_terms_geometric(const std::function<BigFloat(long, long)>& term, double ratio_cap,
                              long prec, const BigFloat& tol, long max_terms) {
    const long wp = guarded(prec) + 16;
    BigFloat sum(wp);
    BigFloat prev_abs(wp);
    BigFloat rbar(wp);
    mpfr_set_d(rbar.raw(), ratio_cap, MPFR_RNDN);
    const BigFloat one = BigFloat::of(1, wp);
    std::vector<BigFloat> recent;
    SumResult out;
    for (long n = 0;; ++n) {
        if (n >= max_terms)
            throw ConvergenceError("tolerance unachievable within max_terms (geometric tail)");
        const BigFloat t = term(n, wp);
        sum = add(sum, t, wp);
        const BigFloat ta = abs(t);
        if (n > 0 && !prev_abs.is_zero()) {
            recent.push_back(div(ta, prev_abs, wp));
            if (recent.size() > 4) recent.erase(recent.begin());
        }
        prev_abs = ta;
        if (n >= 8 && recent.size() == 4) {
            BigFloat r = rbar;
            for (const auto& x : recent) r = max(r, x);
            r = mul(r, BigFloat::parse("1.0625", wp), wp);
            if (r < one) {
                const BigFloat bound = div(mul(ta, r, wp), sub(one, r, wp), wp);
                if (bound <= tol) {
                    out.error_estimate = bound;
                    out.terms_used = n + 1;
                    break;
                }
            }
        }
    }
    out.value = sum.round_to(prec);
    out.method = SumMethod::Direct;
    return out;
}

} // namespace wzs
