// Acceptance suite: every exit criterion of the artifact, executed at its
// stated tolerance, one verdict line per criterion. Returns the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wzs/checks.hpp"
#include "wzs/constants.hpp"

using namespace wzs;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void verdict(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

BigFloat rel_diff(const BigFloat& x, const BigFloat& y) {
    const long wp = std::max(x.prec(), y.prec());
    return div(abs(sub(x, y, wp)), max(abs(x), abs(y)), 64);
}

const BigFloat kRel20 = BigFloat::parse("1e-20", 64);

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    const auto t0 = Clock::now();
    struct Outcome {
        const WZPair* pair;
        bool valid;
        RatFunc defect;
    };
    std::vector<Outcome> outcomes;
    for (const auto& pair : all_certificates()) {
        auto res = check_wz(pair);
        outcomes.push_back({&pair, res.valid, res.defect});
    }
    const double certs_time = seconds_since(t0);

    bool id1_ok = true;
    for (const auto& o : outcomes)
        if (o.pair->identity_id == 1) id1_ok = id1_ok && o.valid && o.defect.is_zero();
    verdict("criterion 1a: identity 1 pairs A and B verify with exactly zero defect", id1_ok);

    // every failure carries a nonzero defect and leaves its numeric statement passing
    bool failures_documented = true;
    int failed_count = 0;
    std::string failed_names;
    for (const auto& o : outcomes) {
        if (o.valid) continue;
        ++failed_count;
        failed_names += (failed_names.empty() ? "" : ", ") + o.pair->name;
        if (o.defect.is_zero()) failures_documented = false;
        try {
            const auto rep =
                check_identity(o.pair->identity_id, o.pair->source_eq, rat(3, 10), 256, kRel20);
            if (!rep.pass) failures_documented = false;
        } catch (const std::exception&) {
            failures_documented = false;
        }
    }
    verdict("criterion 1b: every defective certificate has a nonzero defect polynomial and a "
            "numerically verified statement",
            failures_documented, failed_count == 0 ? "no failures" : "defective: " + failed_names);

    verdict("criterion 1c: at most 4 printed certificates fail",
            failed_count <= 4,
            std::to_string(failed_count) + " of " + std::to_string(outcomes.size()) +
                " fail as printed");

    verdict("criterion 1d: certificate suite runtime below 10 s",
            certs_time < 10.0, std::to_string(certs_time) + " s");
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    bool all_ok = true;
    std::string detail;
    for (const auto& d : registry()) {
        const auto t0 = Clock::now();
        for (const auto& v : d.variants) {
            for (const auto& a : verification_grid(d)) {
                try {
                    const auto rep = check_identity(d.id, v.label, a, 256, kRel20, 100000);
                    if (!(rep.pass && rep.rel_diff <= kRel20)) {
                        all_ok = false;
                        detail += " id" + std::to_string(d.id) + v.label + "@" + a.get_str();
                    }
                } catch (const DomainError&) {
                    // inadmissible point: skipping is allowed, not a failure
                }
            }
        }
        const double secs = seconds_since(t0);
        if (secs >= 60.0) {
            all_ok = false;
            detail += " id" + std::to_string(d.id) + " took " + std::to_string(secs) + " s";
        }
    }
    verdict("criterion 2: identity grid, every variant, |lhs-rhs| < 1e-20 relative at 256 bits, "
            "under 60 s per identity",
            all_ok, detail);
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    const std::vector<std::pair<int, const char*>> expected = {
        {1, "pi^2/2"},  {2, "8pi^2/3"},   {3, "4G"},       {4, "16 ln2"}, {5, "128 ln2"},
        {6, "sqrt3 pi"}, {8, "7 zeta3"},  {9, "256 zeta3"}, {10, "16pi^2/3"}};
    bool all_ok = true;
    std::string detail;
    for (const auto& [id, label] : expected) {
        const auto reps = check_special_values(id, 256, kRel20);
        if (reps.empty()) {
            all_ok = false;
            detail += std::string(" id") + std::to_string(id) + " missing";
            continue;
        }
        for (const auto& rep : reps)
            if (!(rep.pass && rep.rel_diff <= kRel20)) {
                all_ok = false;
                detail += std::string(" id") + std::to_string(id) + "=" + label;
            }
    }
    verdict("criterion 3: all printed f(1/2) evaluations to 1e-20 relative", all_ok, detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    const BigFloat h = BigFloat::parse("1e-10", 64);
    const BigFloat rel8 = BigFloat::parse("1e-8", 64);
    bool all_ok = true;
    std::string detail;
    for (const auto& d : registry()) {
        for (int order : {0, 1, 2}) {
            const auto rep = check_derivative(d.id, order, h, 256, order == 0 ? kRel20 : rel8);
            const BigFloat need = order == 0 ? kRel20 : rel8;
            if (!(rep.pass && rep.rel_diff <= need)) {
                all_ok = false;
                detail += " id" + std::to_string(d.id) + "/f" + std::string(order, '\'');
            }
        }
    }
    verdict("criterion 4: derivative tables, f(0) to 1e-20 and f'(0), f''(0) to 1e-8 with "
            "h = 1e-10 at >= 400-bit working precision",
            all_ok, detail);
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    bool all_ok = true;
    std::string detail;
    for (int id : {8, 9, 10}) {
        const auto reps =
            check_catalan_limit(id, 256, BigFloat::parse("1e-6", 64), kRel20);
        if (!(reps.extrapolated.pass && reps.extrapolated.rel_diff <= BigFloat::parse("1e-6", 64))) {
            all_ok = false;
            detail += " id" + std::to_string(id) + "/extrapolated";
        }
        if (!(reps.inner.pass && reps.inner.rel_diff <= kRel20)) {
            all_ok = false;
            detail += " id" + std::to_string(id) + "/inner";
        }
    }
    verdict("criterion 5: Catalan limits -128G/pi, -8192G/pi, -2048G/pi to 1e-6 by extrapolation "
            "and 1e-20 by the inner series",
            all_ok, detail);
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
    // sum binom(2n,n)^2 / (16^n (2n+1)) = 4G/pi, accelerated, to 1e-25.
    const long prec = 320;
    PochhammerSeries s;
    s.num_params = {aff(rat(0), rat(1, 2)), aff(rat(0), rat(1, 2)), aff(rat(0), rat(1, 2))};
    s.den_params = {aff(rat(0), rat(1)), aff(rat(0), rat(1)), aff(rat(0), rat(3, 2))};
    s.ratio_z = rat(1);
    const auto r = sum_algebraic(s, BigFloat::of(0, prec), prec, BigFloat::parse("1e-28", 64),
                                 100000, rat(0));
    const BigFloat expect =
        div(constant(Constant::Catalan, prec) * 4, constant(Constant::Pi, prec), prec);
    const BigFloat rd = rel_diff(r.value, expect);
    verdict("criterion 6: auxiliary central-binomial identity equals 4G/pi to 1e-25 (accelerated)",
            r.method == SumMethod::Accelerated && rd <= BigFloat::parse("1e-25", 64),
            "rel diff " + rd.str(3));
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    bool all_ok = true;
    std::string detail;
    for (long K : {1L, 5L}) {
        const auto rep = check_telescoping(certificate("id1-pairA"), rat(3, 10), K, 256,
                                           BigFloat::parse("1e-25", 64));
        if (!(rep.pass && rep.abs_diff <= BigFloat::parse("1e-25", 64))) {
            all_ok = false;
            detail += " K=" + std::to_string(K) + " residual " + rep.abs_diff.str(3);
        }
    }
    verdict("criterion 7: telescoping of the first certificate at a = 3/10, K in {1,5}, "
            "residual below 1e-25",
            all_ok, detail);
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    bool all_ok = true;
    std::string detail;
    for (const Rational& a : {rat(0), rat(1, 4), rat(3, 10)}) {
        const auto reps = check_boundary_limit(certificate("id1-pairB"), a, 256,
                                               BigFloat::parse("1e-6", 64), kRel20);
        if (!(reps.column_route.pass &&
              reps.column_route.rel_diff <= BigFloat::parse("1e-6", 64))) {
            all_ok = false;
            detail += " a=" + a.get_str() + "/columns";
        }
        if (!(reps.finite_route.pass && reps.finite_route.rel_diff <= kRel20)) {
            all_ok = false;
            detail += " a=" + a.get_str() + "/finite";
        }
    }
    verdict("criterion 8: boundary function matches 4/(pi cos^2 pi a) at a in {0, 1/4, 3/10} to "
            "1e-6 (columns) and 1e-20 (finite identity)",
            all_ok, detail);
}

// ---------------------------------------------------------------- criterion 9

void criterion_9() {
    // (i) constants: both routes agree at 1000 digits
    bool consts_ok = true;
    const long prec1000 = static_cast<long>(1000 * 3.3219) + 64;
    for (Constant c : {Constant::Pi, Constant::Ln2, Constant::Catalan, Constant::Zeta3,
                       Constant::Sqrt2, Constant::Sqrt3}) {
        const BigFloat a = constant(c, prec1000);
        const BigFloat b = constant_alt(c, prec1000);
        if (a.str(1000) != b.str(1000)) consts_ok = false;
    }
    verdict("criterion 9a: constant dual-route agreement at 1000 digits", consts_ok);

    // (ii) gamma recurrence and reflection at randomized points
    std::mt19937 rng(90210);
    std::uniform_real_distribution<double> pos(0.05, 10.0), refl(-4.9, 4.9);
    bool gamma_ok = true;
    const long prec = 256;
    for (int i = 0; i < 40; ++i) {
        const BigFloat x = BigFloat::parse(std::to_string(pos(rng)), prec);
        const BigFloat lhs = gamma_fn(x + 1, prec);
        const BigFloat rhs = mul(x, gamma_fn(x, prec), prec);
        if (abs(lhs - rhs) > abs(ulp(rhs)) * 16) gamma_ok = false;
    }
    for (int i = 0; i < 40; ++i) {
        BigFloat x = BigFloat::parse(std::to_string(refl(rng)), prec);
        if (x.is_integer()) continue;
        const BigFloat prod =
            mul(gamma_fn(x, prec), gamma_fn(BigFloat::of(1, prec) - x, prec), prec);
        const BigFloat r = div(mul(prod, sin_pi(x, prec), prec), constant(Constant::Pi, prec), prec);
        if (abs(r - BigFloat::of(1, prec)) > abs(ulp(r)) * 16) gamma_ok = false;
    }
    verdict("criterion 9b: gamma recurrence and reflection at randomized points", gamma_ok);

    // (iii) mutation smoke: perturbing any single lhs weight coefficient is
    // caught by a grid check
    bool mutation_ok = true;
    std::string detail;
    for (const auto& d : registry()) {
        const auto& v0 = d.variants.front();
        const auto rhs = eval_rhs(d.id, v0.label, rat(3, 10), 224, BigFloat::parse("1e-24", 64));
        const size_t coeffs = d.lhs.weight.terms().size();
        for (size_t ti = 0; ti < coeffs; ++ti) {
            const IdentityDef bad = perturb_lhs_weight(d, ti);
            const auto lhs = sum_linear(bad.lhs, BigFloat::of(rat(3, 10), 280), 224,
                                        BigFloat::parse("1e-24", 64));
            if (rel_diff(lhs.value, rhs.value) <= BigFloat::parse("1e-8", 64)) {
                mutation_ok = false;
                detail += " id" + std::to_string(d.id) + "/term" + std::to_string(ti);
            }
        }
    }
    verdict("criterion 9c: every single-coefficient weight perturbation is detected by a grid "
            "check",
            mutation_ok, detail);
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("acceptance: %d criterion line(s) failed (%.1f s total)\n", g_failures,
                seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
