#include "wzs/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace wzs {

const char* constant_name(Constant c) {
    switch (c) {
        case Constant::Pi: return "pi";
        case Constant::Ln2: return "ln2";
        case Constant::Catalan: return "catalan";
        case Constant::Zeta3: return "zeta3";
        case Constant::Sqrt2: return "sqrt2";
        case Constant::Sqrt3: return "sqrt3";
    }
    return "?";
}

namespace detail {

namespace {

struct PQT {
    Int p, q, t; // T/Q = sum over the block of products of p/q starting at its left edge
};

PQT split(long lo, long hi, void (*ratio)(long, Int&, Int&)) {
    if (hi - lo == 1) {
        PQT r;
        ratio(lo, r.p, r.q);
        r.t = r.p;
        return r;
    }
    const long mid = lo + (hi - lo) / 2;
    PQT l = split(lo, mid, ratio);
    PQT r = split(mid, hi, ratio);
    PQT out;
    out.p = l.p * r.p;
    out.q = l.q * r.q;
    out.t = l.t * r.q + l.p * r.t;
    return out;
}

} // namespace

BigFloat sum_ratio_series(const RatioSeries& s, long terms, long prec) {
    const long wp = guarded(prec) + 16;
    BigFloat t0 = BigFloat::of(s.first_term, wp);
    if (terms <= 1) return t0.round_to(prec);
    PQT b = split(1, terms, s.ratio);
    // sum = t0 * (1 + T/Q)
    BigFloat t(wp), q(wp);
    mpfr_set_z(t.raw(), b.t.get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(q.raw(), b.q.get_mpz_t(), MPFR_RNDN);
    return mul(t0, add(BigFloat::of(1, wp), div(t, q, wp), wp), prec);
}

} // namespace detail

namespace {

// pi by the Chudnovsky formula:
//   426880 sqrt(10005) / pi = 13591409 + sum_{n>=1} t_n,
//   t_n / t_{n-1} = -(6n-5)(2n-1)(6n-1)(13591409+545140134 n)
//                   / (n^3 * 10939058860032000 * (13591409+545140134(n-1)))
// handled in P/Q/T form so the linear factor rides along exactly.
struct ChudPQT {
    Int p, q, t;
};

ChudPQT chud_split(long lo, long hi) {
    if (hi - lo == 1) {
        const long n = lo;
        ChudPQT r;
        r.p = Int(6 * n - 5) * Int(2 * n - 1) * Int(6 * n - 1);
        r.q = Int(n) * Int(n) * Int(n) * Int("10939058860032000");
        r.t = r.p * (Int(13591409) + Int(545140134) * n);
        if (n % 2 == 1) r.t = -r.t;
        return r;
    }
    const long mid = lo + (hi - lo) / 2;
    ChudPQT l = chud_split(lo, mid);
    ChudPQT r = chud_split(mid, hi);
    ChudPQT out;
    out.p = l.p * r.p;
    out.q = l.q * r.q;
    out.t = l.t * r.q + l.p * r.t;
    return out;
}

BigFloat pi_chudnovsky(long prec) {
    const long wp = guarded(prec) + 32;
    // ~47.11 bits per term
    const long terms = static_cast<long>(wp / 47.11) + 4;
    ChudPQT b = chud_split(1, terms);
    BigFloat q(wp), t(wp);
    mpfr_set_z(q.raw(), b.q.get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(t.raw(), b.t.get_mpz_t(), MPFR_RNDN);
    BigFloat series = add(BigFloat::of(13591409, wp), div(t, q, wp), wp);
    BigFloat s(wp);
    mpfr_sqrt_ui(s.raw(), 10005, MPFR_RNDN);
    return div(mul(s * 426880, BigFloat::of(1, wp), wp), series, prec);
}

// atanh(1/m) = sum_{j>=0} 1/((2j+1) m^(2j+1)) for integer m >= 2.
template <long M>
void atanh_ratio(long j, Int& p, Int& q) {
    p = Int(2 * j - 1);
    q = Int(2 * j + 1) * Int(M) * Int(M);
}

template <long M>
BigFloat atanh_inv(long prec) {
    const long wp = guarded(prec) + 16;
    const double bits_per_term = 2.0 * std::log2(static_cast<double>(M));
    const long terms = static_cast<long>(wp / bits_per_term) + 4;
    detail::RatioSeries s{rat(1, M), &atanh_ratio<M>};
    return detail::sum_ratio_series(s, terms, prec);
}

// sum_{j>=0} (1/3)^j / (2j+1); ln(2+sqrt(3)) = (2/sqrt(3)) * this sum.
void cb_third_ratio(long j, Int& p, Int& q) {
    p = Int(2 * j - 1);
    q = Int(3) * Int(2 * j + 1);
}

// sum_{n>=0} 1/(binom(2n,n) (2n+1)^2); equals (8 G - pi ln(2+sqrt3)) / 3.
void cb_catalan_ratio(long n, Int& p, Int& q) {
    p = Int(n) * Int(2 * n - 1);
    q = Int(2) * Int(2 * n + 1) * Int(2 * n + 1);
}

BigFloat catalan_bsplit(long prec) {
    const long wp = guarded(prec) + 32;
    {
        // central series, ratio -> 1/4
        const long terms = wp / 2 + 8;
        detail::RatioSeries s{rat(1, 1), &cb_catalan_ratio};
        BigFloat central = detail::sum_ratio_series(s, terms, wp);
        const long lterms = static_cast<long>(wp / std::log2(3.0)) + 8;
        detail::RatioSeries l{rat(1, 1), &cb_third_ratio};
        BigFloat lnsum = detail::sum_ratio_series(l, lterms, wp);
        BigFloat sqrt3(wp);
        mpfr_sqrt_ui(sqrt3.raw(), 3, MPFR_RNDN);
        BigFloat ln_2p_sqrt3 = div(lnsum * 2, sqrt3, wp);
        BigFloat pi = pi_chudnovsky(wp);
        // G = 3/8 * central + pi/8 * ln(2+sqrt3)
        return add(div(central * 3, BigFloat::of(8, wp), wp),
                   div(mul(pi, ln_2p_sqrt3, wp), BigFloat::of(8, wp), wp), prec);
    }
}

// Apery's series: zeta(3) = 5/2 * sum_{n>=1} (-1)^(n-1) / (n^3 binom(2n,n)).
// Re-indexed as t_j = term at n = j + 1, so t_0 = 1/2.
void zeta3_ratio(long j, Int& p, Int& q) {
    p = -Int(j) * Int(j) * Int(j);
    q = Int(2) * Int(j + 1) * Int(j + 1) * Int(2 * j + 1);
}

BigFloat zeta3_bsplit(long prec) {
    const long wp = guarded(prec) + 16;
    const long terms = wp / 2 + 8;
    detail::RatioSeries s{rat(1, 2), &zeta3_ratio};
    BigFloat sum = detail::sum_ratio_series(s, terms, wp);
    return div(sum * 5, BigFloat::of(2, wp), prec);
}

BigFloat sqrt_ui_newton(unsigned long x, long prec) {
    // Integer Newton route: floor(sqrt(x * 4^w)) / 2^w with two guard limbs.
    const long w = prec + 16;
    Int scaled(x);
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * static_cast<unsigned long>(w));
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    BigFloat r = BigFloat::of(root, prec + 32);
    mpfr_div_2exp(r.raw(), r.raw(), static_cast<unsigned long>(w), MPFR_RNDN);
    return r.round_to(prec);
}

struct CacheKey {
    Constant c;
    long prec;
    bool operator<(const CacheKey& o) const {
        return c < o.c || (c == o.c && prec < o.prec);
    }
};

std::mutex g_cache_mutex;
std::map<CacheKey, BigFloat> g_cache;

} // namespace

BigFloat constant(Constant c, long prec) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find({c, prec});
        if (it != g_cache.end()) return it->second;
    }
    BigFloat v;
    switch (c) {
        case Constant::Pi: v = pi_chudnovsky(prec); break;
        case Constant::Ln2: v = atanh_inv<3>(prec) * 2; break;
        case Constant::Catalan: v = catalan_bsplit(prec); break;
        case Constant::Zeta3: v = zeta3_bsplit(prec); break;
        case Constant::Sqrt2: {
            BigFloat r(prec);
            mpfr_sqrt_ui(r.raw(), 2, MPFR_RNDN);
            v = r;
            break;
        }
        case Constant::Sqrt3: {
            BigFloat r(prec);
            mpfr_sqrt_ui(r.raw(), 3, MPFR_RNDN);
            v = r;
            break;
        }
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.emplace(CacheKey{c, prec}, v);
    return v;
}

BigFloat constant_alt(Constant c, long prec) {
    BigFloat r(prec);
    switch (c) {
        case Constant::Pi: mpfr_const_pi(r.raw(), MPFR_RNDN); break;
        case Constant::Ln2: mpfr_const_log2(r.raw(), MPFR_RNDN); break;
        case Constant::Catalan: mpfr_const_catalan(r.raw(), MPFR_RNDN); break;
        case Constant::Zeta3: mpfr_zeta_ui(r.raw(), 3, MPFR_RNDN); break;
        case Constant::Sqrt2: return sqrt_ui_newton(2, prec);
        case Constant::Sqrt3: return sqrt_ui_newton(3, prec);
    }
    return r;
}

BigFloat ln_rational(const Rational& q, long prec) {
    if (q <= 0) throw DomainError("ln of a non-positive rational");
    const long wp = guarded(prec);
    return ln(BigFloat::of(q, wp), prec);
}

} // namespace wzs
