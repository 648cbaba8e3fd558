// wzverify: command-line front end for the certificate checks and the
// numeric verification suites. Commands: list | wz | verify | export |
// constants. Reports render as text or deterministic JSON documents.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wzs/report.hpp"

using namespace wzs;

namespace {

// Exact rational from "p/q", integer, or decimal/scientific notation.
Rational parse_point(const std::string& s) {
    if (s.find('/') != std::string::npos || s.find('.') == std::string::npos) {
        if (s.find_first_of("eE.") == std::string::npos) return rat_from_string(s);
    }
    // decimal [sign]int[.frac][e[sign]exp]
    std::string t = s;
    bool neg = false;
    size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = t[i++] == '-';
    std::string digits;
    long frac_digits = 0, exp10 = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) digits += t[i++];
    if (i < t.size() && t[i] == '.') {
        ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            digits += t[i++];
            ++frac_digits;
        }
    }
    if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
        ++i;
        exp10 = std::stol(t.substr(i));
        i = t.size();
    }
    if (i != t.size() || digits.empty()) throw DomainError("unparsable point: " + s);
    Rational r(Int(digits.c_str()));
    const long net = exp10 - frac_digits;
    r *= pow_rat(rat(10), net);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

void emit(const ReportDocument& doc, const RunConfig& cfg) {
    if (!cfg.json_path.empty()) {
        const Json j = report_to_json(doc);
        if (cfg.json_path == "-") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream f(cfg.json_path);
            if (!f) throw Error("cannot write " + cfg.json_path);
            f << j.dump(2) << "\n";
        }
    }
    std::cout << render_report_text(doc);
}

std::vector<int> selected_ids(const std::vector<int>& filter) {
    if (filter.empty()) {
        std::vector<int> all;
        for (const auto& d : registry()) all.push_back(d.id);
        return all;
    }
    return filter;
}

int cmd_list(bool as_json, const std::string& json_path) {
    if (as_json) {
        Json j;
        j["identities"] = Json::array();
        for (const auto& d : registry()) {
            Json e;
            e["id"] = d.id;
            Json vars = Json::array();
            for (const auto& v : d.variants) vars.push_back(v.label);
            e["variants"] = vars;
            Json svs = Json::array();
            for (const auto& sv : d.special_values) {
                Json s;
                s["a"] = sv.a.get_str();
                s["value"] = sv.value.str();
                svs.push_back(s);
            }
            e["special_values"] = svs;
            e["has_g"] = d.aux_g.has_value();
            e["has_catalan_limit"] = d.catalan.has_value();
            j["identities"].push_back(e);
        }
        j["certificates"] = Json::array();
        for (const auto& p : all_certificates()) {
            Json e;
            e["name"] = p.name;
            e["identity"] = p.identity_id;
            e["statement"] = p.source_eq;
            j["certificates"].push_back(e);
        }
        const std::string text = j.dump(2) + "\n";
        if (json_path.empty() || json_path == "-") {
            std::cout << text;
        } else {
            std::ofstream f(json_path);
            f << text;
        }
        return 0;
    }
    for (const auto& d : registry()) {
        std::cout << "Identity " << d.id << ": statements";
        for (const auto& v : d.variants) std::cout << " " << v.label;
        for (const auto& sv : d.special_values)
            std::cout << ", f(" << sv.a.get_str() << ") = " << sv.value.str();
        if (d.catalan) std::cout << ", limit " << d.catalan->value.str();
        std::cout << "\n";
    }
    std::cout << all_certificates().size() << " certificates:\n";
    for (const auto& p : all_certificates())
        std::cout << "  " << p.name << "  certifies statement " << p.source_eq << "\n";
    return 0;
}

int cmd_wz(RunConfig cfg) {
    ReportDocument doc;
    doc.timestamp = iso_utc_now();
    cfg.command = "wz";
    doc.config = cfg;
    bool smoke_ok = true;
    for (int id : selected_ids(cfg.ids)) {
        for (const auto& pair : certificates_for(id)) {
            const auto res = check_wz(pair);
            CertificateVerdict v;
            v.name = pair.name;
            v.identity_id = pair.identity_id;
            v.source_eq = pair.source_eq;
            v.valid = res.valid;
            v.defect = res.valid ? "0" : res.defect.num().str();
            doc.certificates.push_back(std::move(v));
        }
    }
    if (cfg.mutate_smoke) {
        // A deliberately perturbed multiplier must come back invalid.
        WZPair bad = certificate("id1-pairA");
        bad.RG = RatFunc(6 * BiPoly::var_n() + 4 * BiPoly::var_k() + 2);
        const auto res = check_wz(bad);
        smoke_ok = !res.valid;
        CertificateVerdict v;
        v.name = "id1-pairA[mutated]";
        v.identity_id = 1;
        v.source_eq = "(1)";
        v.valid = res.valid;
        v.defect = res.valid ? "0" : res.defect.num().str();
        doc.certificates.push_back(std::move(v));
        std::cout << (smoke_ok ? "mutation smoke test: perturbation detected\n"
                               : "mutation smoke test FAILED: perturbation not detected\n");
    }
    const int added = append_errata(cfg.errata_path, doc.certificates);
    if (added > 0)
        std::cout << "recorded " << added << " defect entr" << (added == 1 ? "y" : "ies")
                  << " in " << cfg.errata_path << "\n";
    emit(doc, cfg);
    return smoke_ok ? 0 : 1;
}

int cmd_verify(RunConfig cfg) {
    ReportDocument doc;
    doc.timestamp = iso_utc_now();
    cfg.command = "verify";
    doc.config = cfg;
    const BigFloat tol = cfg.tol_value();
    const std::vector<Rational> grid = cfg.grid.empty() ? default_grid() : cfg.grid;

    for (int id : selected_ids(cfg.ids)) {
        const auto& d = identity(id);
        const std::vector<Rational> id_grid =
            cfg.grid.empty() ? verification_grid(d) : cfg.grid;
        for (const auto& v : d.variants) {
            if (!cfg.variants.empty() &&
                std::find(cfg.variants.begin(), cfg.variants.end(), v.label) ==
                    cfg.variants.end())
                continue;
            for (const auto& a : id_grid) {
                try {
                    doc.checks.push_back(
                        check_identity(id, v.label, a, cfg.prec, tol, cfg.max_terms));
                } catch (const DomainError& e) {
                    doc.skipped.push_back({id, v.label, a.get_str(), e.what()});
                }
            }
        }
        if (cfg.special)
            for (auto& rep : check_special_values(id, cfg.prec, tol))
                doc.checks.push_back(std::move(rep));
        if (cfg.derivatives) {
            const BigFloat h = BigFloat::parse("1e-10", 64);
            const BigFloat rel8 = BigFloat::parse("1e-8", 64);
            for (int order : {0, 1, 2})
                doc.checks.push_back(
                    check_derivative(id, order, h, cfg.prec, order == 0 ? tol : rel8));
        }
        if (cfg.limits && d.catalan) {
            const auto reps =
                check_catalan_limit(id, cfg.prec, BigFloat::parse("1e-6", 64), tol);
            doc.checks.push_back(reps.extrapolated);
            doc.checks.push_back(reps.inner);
        }
        if (cfg.telescope_k >= 0) {
            for (const auto& pair : certificates_for(id)) {
                if (pair.B.base_n() < 0) continue;
                try {
                    if (pair.B.ratio_limit(HyperTerm::Direction::N) >= 1) continue;
                } catch (const DomainError&) {
                    continue;
                }
                if (!check_wz(pair).valid) {
                    doc.skipped.push_back({id, pair.name, "-",
                                           "defective as printed; telescoping not applicable"});
                    continue;
                }
                for (const auto& a : grid) {
                    try {
                        doc.checks.push_back(check_telescoping(pair, a, cfg.telescope_k,
                                                               cfg.prec,
                                                               BigFloat::parse("1e-25", 64)));
                    } catch (const Error& e) {
                        doc.skipped.push_back({id, pair.name, a.get_str(), e.what()});
                    }
                }
            }
        }
        if (cfg.boundary) {
            for (const auto& pair : certificates_for(id)) {
                if (!boundary_form_for(pair.name)) continue;
                for (const auto& a : grid) {
                    try {
                        const auto reps =
                            check_boundary_limit(pair, a, cfg.prec,
                                                 BigFloat::parse("1e-6", 64), tol);
                        doc.checks.push_back(reps.column_route);
                        doc.checks.push_back(reps.finite_route);
                    } catch (const Error& e) {
                        doc.skipped.push_back({id, pair.name, a.get_str(), e.what()});
                    }
                }
            }
        }
    }
    emit(doc, cfg);
    return doc.all_passed() ? 0 : 1;
}

int cmd_export(const std::string& path) {
    const Json j = export_registry();
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(path);
        if (!f) throw Error("cannot write " + path);
        f << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_constants(long digits, const std::string& json_path) {
    const long prec = static_cast<long>(digits * 3.3219 + 64);
    Json j;
    bool ok = true;
    for (Constant c : {Constant::Pi, Constant::Ln2, Constant::Catalan, Constant::Zeta3}) {
        const BigFloat v = constant(c, prec);
        const BigFloat alt = constant_alt(c, prec);
        const bool agree = abs(sub(v, alt, prec)) <= abs(ulp(v)) * 16;
        ok = ok && agree;
        std::cout << constant_name(c) << " = " << v.str(static_cast<size_t>(digits))
                  << (agree ? "" : "   ROUTES DISAGREE") << "\n";
        j[constant_name(c)] = v.str(static_cast<size_t>(digits));
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path == "-" ? "/dev/stdout" : json_path);
        f << j.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for ten extended Ramanujan-type series and their WZ certificates"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> grid_raw, a_raw;

    auto add_common = [&](CLI::App* sub, bool with_numeric) {
        sub->add_option("--id", cfg.ids, "identity filter (1..10, repeatable)");
        sub->add_option("--json", cfg.json_path, "write a JSON report to this path ('-' = stdout)");
        if (with_numeric) {
            sub->add_option("--prec", cfg.prec, "working precision in bits (>= 64)")
                ->envname("WZVERIFY_PREC")
                ->check(CLI::Range(64L, 1L << 20));
            sub->add_option("--tol", cfg.tol, "relative tolerance, e.g. 1e-20")
                ->envname("WZVERIFY_TOL");
            sub->add_option("--max-terms", cfg.max_terms, "series term cap")
                ->envname("WZVERIFY_MAX_TERMS")
                ->check(CLI::PositiveNumber);
        }
    };

    auto* list = app.add_subcommand("list", "print the identity and certificate catalog");
    bool list_json = false;
    std::string list_json_path;
    list->add_flag("--json", list_json, "emit the catalog as JSON");
    list->add_option("--out", list_json_path, "path for --json output");

    auto* wz = app.add_subcommand("wz", "exact WZ-relation check of the printed certificates");
    add_common(wz, false);
    wz->add_flag("--all", "check every certificate (default when no --id)");
    wz->add_flag("--mutate-smoke", cfg.mutate_smoke,
                 "also verify that a perturbed multiplier is rejected");
    wz->add_option("--errata", cfg.errata_path, "errata ledger path")
        ->envname("WZVERIFY_ERRATA");

    auto* verify = app.add_subcommand("verify", "numeric verification suites");
    add_common(verify, true);
    verify->add_option("--variant", cfg.variants, "statement label filter, e.g. (2)");
    verify->add_option("--a", a_raw, "explicit grid point (rational or decimal, repeatable)");
    verify->add_option("--grid", grid_raw, "comma-separated grid points")->delimiter(',');
    verify->add_flag("--special", cfg.special, "include special-value checks");
    verify->add_flag("--derivatives", cfg.derivatives, "include the f(0), f'(0), f''(0) table");
    verify->add_flag("--limits", cfg.limits, "include Catalan-constant limit checks");
    verify->add_option("--telescope", cfg.telescope_k, "include telescoping checks at depth K");
    verify->add_flag("--boundary", cfg.boundary, "include boundary-function checks");

    auto* exp = app.add_subcommand("export", "dump the registry as JSON");
    std::string export_path;
    exp->add_option("--json", export_path, "output path ('-' = stdout)");

    auto* cons = app.add_subcommand("constants", "print pi, ln2, G, zeta(3)");
    long digits = 50;
    std::string cons_json;
    cons->add_option("--digits", digits, "significant digits")->check(CLI::Range(1L, 100000L));
    cons->add_option("--json", cons_json, "JSON output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cfg.tol_value() <= BigFloat::of(0, 64)) throw DomainError("tolerance must be > 0");
        for (const auto& s : a_raw) cfg.grid.push_back(parse_point(s));
        for (const auto& s : grid_raw) cfg.grid.push_back(parse_point(s));
        if (list->parsed()) return cmd_list(list_json, list_json_path);
        if (wz->parsed()) return cmd_wz(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (exp->parsed()) return cmd_export(export_path);
        if (cons->parsed()) return cmd_constants(digits, cons_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
