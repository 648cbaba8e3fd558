#include "wzs/report.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

namespace wzs {

namespace {

std::string bf_str(const BigFloat& x) { return x.str(); }

Json value_json(const BigFloat& x) {
    Json j;
    j["value"] = bf_str(x);
    j["prec_bits"] = x.prec();
    return j;
}

Json affine_json(const AffineInA& f) { return Json::array({f.coef.get_str(), f.offset.get_str()}); }

AffineInA affine_from(const Json& j) {
    return aff(rat_from_string(j.at(0).get<std::string>()),
               rat_from_string(j.at(1).get<std::string>()));
}

Json bipoly_json(const BiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json::array({e.first, e.second, c.get_str()}));
    return terms;
}

BiPoly bipoly_from(const Json& j) {
    BiPoly p;
    for (const auto& t : j)
        p += BiPoly::monomial(rat_from_string(t.at(2).get<std::string>()), t.at(0).get<int>(),
                              t.at(1).get<int>());
    return p;
}

Json series_json(const PochhammerSeries& s) {
    Json j;
    Json num = Json::array(), den = Json::array();
    for (const auto& x : s.num_params) num.push_back(affine_json(x));
    for (const auto& x : s.den_params) den.push_back(affine_json(x));
    j["num"] = num;
    j["den"] = den;
    j["z"] = s.ratio_z.get_str();
    j["weight"] = bipoly_json(s.weight);
    return j;
}

PochhammerSeries series_from(const Json& j) {
    PochhammerSeries s;
    for (const auto& x : j.at("num")) s.num_params.push_back(affine_from(x));
    for (const auto& x : j.at("den")) s.den_params.push_back(affine_from(x));
    s.ratio_z = rat_from_string(j.at("z").get<std::string>());
    s.weight = bipoly_from(j.at("weight"));
    return s;
}

const char* kind_name(ClosedForm::Kind k) {
    switch (k) {
        case ClosedForm::Kind::Literal: return "lit";
        case ClosedForm::Kind::Const: return "const";
        case ClosedForm::Kind::Param: return "a";
        case ClosedForm::Kind::Add: return "add";
        case ClosedForm::Kind::Sub: return "sub";
        case ClosedForm::Kind::Mul: return "mul";
        case ClosedForm::Kind::Div: return "div";
        case ClosedForm::Kind::Pow: return "pow";
        case ClosedForm::Kind::CosPi: return "cospi";
        case ClosedForm::Kind::PochA: return "poch";
        case ClosedForm::Kind::LnRat: return "ln";
    }
    return "?";
}

Json closedform_json(const ClosedForm& f) {
    if (f.empty()) return Json{{"kind", "lit"}, {"q", "1"}};
    const auto& n = *f.node();
    Json j;
    j["kind"] = kind_name(n.kind);
    switch (n.kind) {
        case ClosedForm::Kind::Literal: j["q"] = n.lit.get_str(); break;
        case ClosedForm::Kind::Const: j["name"] = constant_name(n.named); break;
        case ClosedForm::Kind::Param: break;
        case ClosedForm::Kind::Add:
        case ClosedForm::Kind::Sub:
        case ClosedForm::Kind::Mul:
        case ClosedForm::Kind::Div:
            j["lhs"] = closedform_json(ClosedForm(n.lhs));
            j["rhs"] = closedform_json(ClosedForm(n.rhs));
            break;
        case ClosedForm::Kind::Pow:
            j["base"] = n.lit.get_str();
            j["exp"] = affine_json(n.affine);
            break;
        case ClosedForm::Kind::CosPi: j["arg"] = affine_json(n.affine); break;
        case ClosedForm::Kind::PochA: j["x"] = n.lit.get_str(); break;
        case ClosedForm::Kind::LnRat: j["q"] = n.lit.get_str(); break;
    }
    return j;
}

ClosedForm closedform_from(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lit") return ClosedForm::literal(rat_from_string(j.at("q").get<std::string>()));
    if (kind == "const") {
        const std::string name = j.at("name").get<std::string>();
        for (Constant c : {Constant::Pi, Constant::Ln2, Constant::Catalan, Constant::Zeta3,
                           Constant::Sqrt2, Constant::Sqrt3})
            if (name == constant_name(c)) return ClosedForm::constant(c);
        throw DomainError("unknown constant in registry document: " + name);
    }
    if (kind == "a") return ClosedForm::param();
    if (kind == "pow")
        return ClosedForm::pow_of(rat_from_string(j.at("base").get<std::string>()),
                                  affine_from(j.at("exp")));
    if (kind == "cospi") return ClosedForm::cos_pi_of(affine_from(j.at("arg")));
    if (kind == "poch") return ClosedForm::poch_a(rat_from_string(j.at("x").get<std::string>()));
    if (kind == "ln") return ClosedForm::ln_of(rat_from_string(j.at("q").get<std::string>()));
    const ClosedForm l = closedform_from(j.at("lhs"));
    const ClosedForm r = closedform_from(j.at("rhs"));
    if (kind == "add") return l + r;
    if (kind == "sub") return l - r;
    if (kind == "mul") return l * r;
    if (kind == "div") return l / r;
    throw DomainError("unknown closed-form node kind: " + kind);
}

Json ratfunc_json(const RatFunc& f) {
    Json j;
    j["num"] = bipoly_json(f.num());
    j["den"] = bipoly_json(f.den());
    return j;
}

RatFunc ratfunc_from(const Json& j) {
    return RatFunc(bipoly_from(j.at("num")), bipoly_from(j.at("den")));
}

Json hyperterm_json(const HyperTerm& t) {
    Json j;
    j["const"] = t.const_factor().get_str();
    j["base_n"] = t.base_n().get_str();
    j["base_k"] = t.base_k().get_str();
    Json gs = Json::array();
    for (const auto& g : t.gammas())
        gs.push_back(Json::array({g.alpha, g.beta, g.offset.get_str(), g.exponent}));
    j["gammas"] = gs;
    return j;
}

HyperTerm hyperterm_from(const Json& j) {
    std::vector<GammaFactor> gs;
    for (const auto& g : j.at("gammas")) {
        GammaFactor f;
        f.alpha = g.at(0).get<int>();
        f.beta = g.at(1).get<int>();
        f.offset = rat_from_string(g.at(2).get<std::string>());
        f.exponent = g.at(3).get<int>();
        gs.push_back(f);
    }
    return HyperTerm(rat_from_string(j.at("const").get<std::string>()),
                     rat_from_string(j.at("base_n").get<std::string>()),
                     rat_from_string(j.at("base_k").get<std::string>()), std::move(gs));
}

} // namespace

int ReportDocument::failed() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string iso_utc_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

Json report_to_json(const ReportDocument& doc) {
    Json j;
    j["tool"] = doc.tool;
    j["version"] = doc.version;
    j["timestamp"] = doc.timestamp;
    Json cfg;
    cfg["command"] = doc.config.command;
    cfg["ids"] = doc.config.ids;
    cfg["variants"] = doc.config.variants;
    Json grid = Json::array();
    for (const auto& a : doc.config.grid) grid.push_back(a.get_str());
    cfg["grid"] = grid;
    cfg["prec_bits"] = doc.config.prec;
    cfg["tol"] = doc.config.tol;
    cfg["max_terms"] = doc.config.max_terms;
    Json flags = Json::array();
    if (doc.config.special) flags.push_back("special");
    if (doc.config.derivatives) flags.push_back("derivatives");
    if (doc.config.limits) flags.push_back("limits");
    if (doc.config.boundary) flags.push_back("boundary");
    if (doc.config.telescope_k >= 0)
        flags.push_back("telescope=" + std::to_string(doc.config.telescope_k));
    if (doc.config.mutate_smoke) flags.push_back("mutate-smoke");
    cfg["flags"] = flags;
    j["config"] = cfg;

    Json checks = Json::array();
    for (const auto& c : doc.checks) {
        Json e;
        e["kind"] = c.kind;
        e["identity"] = c.identity_id;
        e["variant"] = c.variant;
        e["a"] = c.a_label;
        e["lhs"] = value_json(c.lhs);
        e["rhs"] = value_json(c.rhs);
        e["abs_diff"] = bf_str(c.abs_diff);
        e["rel_diff"] = bf_str(c.rel_diff);
        e["tol"] = bf_str(c.tol);
        e["lhs_err"] = bf_str(c.lhs_err);
        e["rhs_err"] = bf_str(c.rhs_err);
        e["terms"] = c.terms;
        e["pass"] = c.pass;
        if (!c.note.empty()) e["note"] = c.note;
        checks.push_back(e);
    }
    j["checks"] = checks;

    Json certs = Json::array();
    for (const auto& v : doc.certificates) {
        Json e;
        e["name"] = v.name;
        e["identity"] = v.identity_id;
        e["statement"] = v.source_eq;
        e["valid"] = v.valid;
        e["defect"] = v.defect;
        certs.push_back(e);
    }
    j["certificates"] = certs;

    Json skipped = Json::array();
    for (const auto& s : doc.skipped) {
        Json e;
        e["identity"] = s.identity_id;
        e["variant"] = s.variant;
        e["a"] = s.a_label;
        e["reason"] = s.reason;
        skipped.push_back(e);
    }
    j["skipped"] = skipped;

    int invalid_certs = 0;
    for (const auto& v : doc.certificates)
        if (!v.valid) ++invalid_certs;
    Json summary;
    summary["checks_total"] = doc.checks.size();
    summary["checks_failed"] = doc.failed();
    summary["certificates_total"] = doc.certificates.size();
    summary["certificates_invalid"] = invalid_certs;
    summary["skipped"] = doc.skipped.size();
    j["summary"] = summary;
    return j;
}

std::string render_report_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << doc.tool << " " << doc.version << "  (" << doc.timestamp << ")\n";
    for (const auto& c : doc.checks) {
        os << (c.pass ? "  pass  " : "  FAIL  ") << c.kind << " id" << c.identity_id << " "
           << c.variant << " @ a=" << c.a_label << "  rel_diff=" << c.rel_diff.str(3)
           << "  (tol " << c.tol.str(2) << ", terms " << c.terms << ")\n";
    }
    for (const auto& v : doc.certificates) {
        os << (v.valid ? "  valid    " : "  DEFECT   ") << v.name << "  statement " << v.source_eq
           << "\n";
    }
    for (const auto& s : doc.skipped) {
        os << "  skip    id" << s.identity_id << " " << s.variant << " @ a=" << s.a_label << ": "
           << s.reason << "\n";
    }
    int invalid_certs = 0;
    for (const auto& v : doc.certificates)
        if (!v.valid) ++invalid_certs;
    os << "summary: " << doc.checks.size() << " checks, " << doc.failed() << " failed; "
       << doc.certificates.size() << " certificates, " << invalid_certs << " with defects; "
       << doc.skipped.size() << " skipped\n";
    return os.str();
}

Json export_registry() {
    Json j;
    j["format"] = "wzs-registry";
    j["format_version"] = 1;
    Json ids = Json::array();
    for (const auto& d : registry()) {
        Json e;
        e["id"] = d.id;
        e["lhs"] = series_json(d.lhs);
        e["aux_g"] = d.aux_g ? series_json(*d.aux_g) : Json(nullptr);
        Json vars = Json::array();
        for (const auto& v : d.variants) {
            Json vj;
            vj["label"] = v.label;
            Json terms = Json::array();
            for (const auto& t : v.terms) {
                Json tj;
                tj["coeff"] = closedform_json(t.coeff);
                tj["series"] = t.series ? series_json(*t.series) : Json(nullptr);
                terms.push_back(tj);
            }
            vj["terms"] = terms;
            vars.push_back(vj);
        }
        e["variants"] = vars;
        Json svs = Json::array();
        for (const auto& sv : d.special_values) {
            Json s;
            s["a"] = sv.a.get_str();
            s["value"] = closedform_json(sv.value);
            svs.push_back(s);
        }
        e["special_values"] = svs;
        Json der;
        der["f0"] = closedform_json(d.derivatives.f0);
        der["f1"] = closedform_json(d.derivatives.f1);
        der["f2"] = closedform_json(d.derivatives.f2);
        e["derivatives"] = der;
        if (d.catalan) {
            Json c;
            c["value"] = closedform_json(d.catalan->value);
            c["inner_coeff"] = d.catalan->inner_coeff.get_str();
            c["inner"] = series_json(d.catalan->inner);
            c["g_prefactor"] = closedform_json(d.catalan->g_prefactor);
            e["catalan"] = c;
        } else {
            e["catalan"] = nullptr;
        }
        if (d.composition) {
            Json c;
            c["composed"] = d.composition->composed;
            c["base"] = d.composition->base;
            c["g_identity"] = d.composition->g_identity;
            c["g_variant"] = d.composition->g_variant;
            e["composition"] = c;
        } else {
            e["composition"] = nullptr;
        }
        ids.push_back(e);
    }
    j["identities"] = ids;

    Json certs = Json::array();
    for (const auto& p : all_certificates()) {
        Json e;
        e["name"] = p.name;
        e["identity"] = p.identity_id;
        e["statement"] = p.source_eq;
        e["B"] = hyperterm_json(p.B);
        e["RF"] = ratfunc_json(p.RF);
        e["RG"] = ratfunc_json(p.RG);
        certs.push_back(e);
    }
    j["certificates"] = certs;

    Json bounds = Json::array();
    for (const auto& b : boundary_forms()) {
        Json e;
        e["pair"] = b.pair_name;
        e["s_of_a"] = closedform_json(b.s_of_a);
        bounds.push_back(e);
    }
    j["boundary_forms"] = bounds;
    return j;
}

ImportedRegistry import_registry(const Json& j) {
    if (j.at("format").get<std::string>() != "wzs-registry")
        throw DomainError("not a registry document");
    ImportedRegistry out;
    for (const auto& e : j.at("identities")) {
        IdentityDef d;
        d.id = e.at("id").get<int>();
        d.lhs = series_from(e.at("lhs"));
        if (!e.at("aux_g").is_null()) d.aux_g = series_from(e.at("aux_g"));
        for (const auto& vj : e.at("variants")) {
            RhsVariant v;
            v.label = vj.at("label").get<std::string>();
            for (const auto& tj : vj.at("terms")) {
                RhsTerm t;
                t.coeff = closedform_from(tj.at("coeff"));
                if (!tj.at("series").is_null()) t.series = series_from(tj.at("series"));
                v.terms.push_back(std::move(t));
            }
            d.variants.push_back(std::move(v));
        }
        for (const auto& sj : e.at("special_values"))
            d.special_values.push_back(
                {rat_from_string(sj.at("a").get<std::string>()), closedform_from(sj.at("value"))});
        d.derivatives = {closedform_from(e.at("derivatives").at("f0")),
                         closedform_from(e.at("derivatives").at("f1")),
                         closedform_from(e.at("derivatives").at("f2"))};
        if (!e.at("catalan").is_null()) {
            const auto& c = e.at("catalan");
            d.catalan = CatalanLimit{
                closedform_from(c.at("value")),
                rat_from_string(c.at("inner_coeff").get<std::string>()),
                series_from(c.at("inner")), closedform_from(c.at("g_prefactor"))};
        }
        if (!e.at("composition").is_null()) {
            const auto& c = e.at("composition");
            d.composition =
                Composition{c.at("composed").get<std::string>(), c.at("base").get<std::string>(),
                            c.at("g_identity").get<int>(), c.at("g_variant").get<std::string>()};
        }
        out.identities.push_back(std::move(d));
    }
    for (const auto& e : j.at("certificates")) {
        WZPair p;
        p.name = e.at("name").get<std::string>();
        p.identity_id = e.at("identity").get<int>();
        p.source_eq = e.at("statement").get<std::string>();
        p.B = hyperterm_from(e.at("B"));
        p.RF = ratfunc_from(e.at("RF"));
        p.RG = ratfunc_from(e.at("RG"));
        out.certificates.push_back(std::move(p));
    }
    for (const auto& e : j.at("boundary_forms"))
        out.boundary.push_back(
            {e.at("pair").get<std::string>(), closedform_from(e.at("s_of_a"))});
    return out;
}

namespace {

bool same_series(const std::optional<PochhammerSeries>& x,
                 const std::optional<PochhammerSeries>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || *x == *y;
}

bool same_identity(const IdentityDef& a, const IdentityDef& b) {
    if (a.id != b.id || !(a.lhs == b.lhs) || !same_series(a.aux_g, b.aux_g)) return false;
    if (a.variants.size() != b.variants.size()) return false;
    for (size_t i = 0; i < a.variants.size(); ++i) {
        const auto& va = a.variants[i];
        const auto& vb = b.variants[i];
        if (va.label != vb.label || va.terms.size() != vb.terms.size()) return false;
        for (size_t t = 0; t < va.terms.size(); ++t) {
            if (!va.terms[t].coeff.same_tree(vb.terms[t].coeff)) return false;
            if (!same_series(va.terms[t].series, vb.terms[t].series)) return false;
        }
    }
    if (a.special_values.size() != b.special_values.size()) return false;
    for (size_t i = 0; i < a.special_values.size(); ++i) {
        if (a.special_values[i].a != b.special_values[i].a) return false;
        if (!a.special_values[i].value.same_tree(b.special_values[i].value)) return false;
    }
    if (!a.derivatives.f0.same_tree(b.derivatives.f0) ||
        !a.derivatives.f1.same_tree(b.derivatives.f1) ||
        !a.derivatives.f2.same_tree(b.derivatives.f2))
        return false;
    if (a.catalan.has_value() != b.catalan.has_value()) return false;
    if (a.catalan) {
        if (!a.catalan->value.same_tree(b.catalan->value) ||
            a.catalan->inner_coeff != b.catalan->inner_coeff ||
            !(a.catalan->inner == b.catalan->inner) ||
            !a.catalan->g_prefactor.same_tree(b.catalan->g_prefactor))
            return false;
    }
    if (a.composition.has_value() != b.composition.has_value()) return false;
    if (a.composition) {
        if (a.composition->composed != b.composition->composed ||
            a.composition->base != b.composition->base ||
            a.composition->g_identity != b.composition->g_identity ||
            a.composition->g_variant != b.composition->g_variant)
            return false;
    }
    return true;
}

} // namespace

bool same_registry(const ImportedRegistry& imported) {
    const auto& reg = registry();
    if (imported.identities.size() != reg.size()) return false;
    for (size_t i = 0; i < reg.size(); ++i)
        if (!same_identity(imported.identities[i], reg[i])) return false;
    const auto& certs = all_certificates();
    if (imported.certificates.size() != certs.size()) return false;
    for (size_t i = 0; i < certs.size(); ++i) {
        const auto& x = imported.certificates[i];
        const auto& y = certs[i];
        if (x.name != y.name || x.identity_id != y.identity_id || x.source_eq != y.source_eq)
            return false;
        if (!(x.B == y.B)) return false;
        if (!(x.RF.num() == y.RF.num()) || !(x.RF.den() == y.RF.den())) return false;
        if (!(x.RG.num() == y.RG.num()) || !(x.RG.den() == y.RG.den())) return false;
    }
    const auto& bf = boundary_forms();
    if (imported.boundary.size() != bf.size()) return false;
    for (size_t i = 0; i < bf.size(); ++i)
        if (imported.boundary[i].pair_name != bf[i].pair_name ||
            !imported.boundary[i].s_of_a.same_tree(bf[i].s_of_a))
            return false;
    return true;
}

int append_errata(const std::string& path, const std::vector<CertificateVerdict>& verdicts) {
    std::string existing;
    {
        std::ifstream in(path);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            existing = ss.str();
        }
    }
    int added = 0;
    std::ostringstream out;
    for (const auto& v : verdicts) {
        if (v.valid) continue;
        const std::string marker = "### " + v.name;
        if (existing.find(marker) != std::string::npos) continue;
        out << "\n" << marker << "\n\n";
        out << "- statement: " << v.source_eq << " (identity " << v.identity_id << ")\n";
        out << "- recorded: " << iso_utc_now() << "\n";
        out << "- the telescoping relation fails identically; defect numerator polynomial:\n\n";
        out << "```\n" << v.defect << "\n```\n";
        ++added;
    }
    if (added > 0) {
        std::ofstream f(path, std::ios::app);
        if (!f) throw Error("cannot open errata ledger at " + path);
        f << out.str();
    }
    return added;
}

} // namespace wzs
