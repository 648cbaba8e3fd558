#pragma once

// Machine-readable documents: verification reports, the registry export with
// its round-trip importer, and the append-only certificate errata ledger.
// Numeric values are serialized as decimal strings with explicit precision
// metadata; field order is deterministic.

#include <optional>
#include <string>
#include <vector>

// vendored single-header json
#include <json.hpp>

#include "wzs/checks.hpp"

namespace wzs {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::vector<int> ids;               // empty: all
    std::vector<std::string> variants;  // empty: all
    std::vector<Rational> grid;         // empty: default grid
    long prec = 256;
    std::string tol = "1e-20";
    long max_terms = 100000;
    bool special = false, derivatives = false, limits = false, boundary = false;
    long telescope_k = -1; // <0: off
    bool mutate_smoke = false;
    std::string json_path;   // empty: human-readable to stdout
    std::string errata_path = "ERRATA.md";

    BigFloat tol_value() const { return BigFloat::parse(tol, 64); }
};

struct CertificateVerdict {
    std::string name;
    int identity_id = 0;
    std::string source_eq;
    bool valid = false;
    std::string defect; // numerator polynomial of the defect; "0" when valid
};

struct Skipped {
    int identity_id = 0;
    std::string variant;
    std::string a_label;
    std::string reason;
};

struct ReportDocument {
    std::string tool = "wzverify";
    std::string version = "1.0.0";
    std::string timestamp; // ISO-8601 UTC
    RunConfig config;
    std::vector<CheckReport> checks;
    std::vector<CertificateVerdict> certificates;
    std::vector<Skipped> skipped;

    int total() const { return static_cast<int>(checks.size() + certificates.size()); }
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

std::string iso_utc_now();

Json report_to_json(const ReportDocument& doc);
std::string render_report_text(const ReportDocument& doc);

// Registry snapshot for external consumption, and its inverse. The importer
// rebuilds full structures; import(export(registry)) compares equal.
Json export_registry();

struct ImportedRegistry {
    std::vector<IdentityDef> identities;
    std::vector<WZPair> certificates;
    std::vector<BoundaryForm> boundary;
};
ImportedRegistry import_registry(const Json& j);

bool same_registry(const ImportedRegistry& imported);

// Appends newly observed defects to the ledger (deduplicated by certificate
// name); returns the number of entries added.
int append_errata(const std::string& path, const std::vector<CertificateVerdict>& verdicts);

} // namespace wzs
