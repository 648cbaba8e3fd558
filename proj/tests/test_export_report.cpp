// Registry export round-trip, report document shape, and the errata ledger.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "wzs/report.hpp"

using namespace wzs;

TEST_CASE("registry export round-trips to an identical registry") {
    const Json j = export_registry();
    CHECK(j.at("identities").size() == 10);
    CHECK(j.at("certificates").size() == 18);
    const ImportedRegistry imported = import_registry(j);
    CHECK(same_registry(imported));

    // serialization itself is deterministic
    CHECK(export_registry().dump() == j.dump());
}

TEST_CASE("export carries the geometric ratios of the statements") {
    const Json j = export_registry();
    // identity 3 lhs has z = -1/8, identity 5 lhs has z = -27/512
    for (const auto& e : j.at("identities")) {
        if (e.at("id") == 3) CHECK(e.at("lhs").at("z") == "-1/8");
        if (e.at("id") == 5) CHECK(e.at("lhs").at("z") == "-27/512");
    }
}

TEST_CASE("a corrupted registry document does not import as equal") {
    Json j = export_registry();
    j["identities"][0]["lhs"]["z"] = "1/5";
    CHECK_FALSE(same_registry(import_registry(j)));
}

namespace {
// Minimal structural validation against docs/report.schema.json's required
// fields and types.
void validate_report_shape(const Json& j) {
    for (const char* key :
         {"tool", "version", "timestamp", "config", "checks", "certificates", "skipped", "summary"})
        REQUIRE(j.contains(key));
    CHECK(j.at("tool") == "wzverify");
    const auto& cfg = j.at("config");
    for (const char* key : {"command", "ids", "variants", "grid", "prec_bits", "tol", "max_terms", "flags"})
        REQUIRE(cfg.contains(key));
    CHECK(cfg.at("prec_bits").get<long>() >= 64);
    for (const auto& c : j.at("checks")) {
        for (const char* key : {"kind", "identity", "variant", "a", "lhs", "rhs", "abs_diff",
                                "rel_diff", "tol", "lhs_err", "rhs_err", "terms", "pass"})
            REQUIRE(c.contains(key));
        CHECK(c.at("lhs").at("value").is_string()); // decimal strings, never binary floats
        CHECK(c.at("lhs").at("prec_bits").is_number_integer());
        CHECK(c.at("pass").is_boolean());
    }
    for (const auto& c : j.at("certificates"))
        for (const char* key : {"name", "identity", "statement", "valid", "defect"})
            REQUIRE(c.contains(key));
    for (const char* key : {"checks_total", "checks_failed", "certificates_total",
                            "certificates_invalid", "skipped"})
        REQUIRE(j.at("summary").contains(key));
}
} // namespace

TEST_CASE("report documents validate against the shipped schema shape") {
    ReportDocument doc;
    doc.timestamp = iso_utc_now();
    doc.config.command = "verify";
    doc.config.ids = {1};
    doc.checks.push_back(check_identity(1, "(1)", rat(3, 10), 192, BigFloat::parse("1e-16", 64)));
    for (const auto& pair : certificates_for(1)) {
        const auto res = check_wz(pair);
        doc.certificates.push_back({pair.name, pair.identity_id, pair.source_eq, res.valid,
                                    res.valid ? "0" : res.defect.num().str()});
    }
    doc.skipped.push_back({1, "(1)", "1/2", "singular point"});
    const Json j = report_to_json(doc);
    validate_report_shape(j);

    // identical config reproduces identical numeric fields
    ReportDocument doc2 = doc;
    doc2.checks.clear();
    doc2.checks.push_back(check_identity(1, "(1)", rat(3, 10), 192, BigFloat::parse("1e-16", 64)));
    const Json j2 = report_to_json(doc2);
    CHECK(j.at("checks")[0].dump() == j2.at("checks")[0].dump());
}

TEST_CASE("errata ledger appends defects once") {
    const std::string path = "test_errata_tmp.md";
    std::remove(path.c_str());
    {
        std::ofstream f(path);
        f << "# ledger\n";
    }
    std::vector<CertificateVerdict> verdicts;
    verdicts.push_back({"idX-test", 4, "(7)", false, "n - k"});
    verdicts.push_back({"idY-test", 1, "(1)", true, "0"});
    CHECK(append_errata(path, verdicts) == 1);
    CHECK(append_errata(path, verdicts) == 0); // deduplicated
    std::ifstream in(path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(all.find("### idX-test") != std::string::npos);
    CHECK(all.find("n - k") != std::string::npos);
    CHECK(all.find("idY-test") == std::string::npos);
    std::remove(path.c_str());
}
