#pragma once

// Report assembly and serialization.  JSON is the canonical format with
// alphabetical field order; the canonical form drops per-case timings so two
// identical sweeps serialize to identical bytes.  CSV flattens one case per
// row, text is a short human summary.  Schema documented in
// docs/report_schema.md and versioned through schema_version.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "qsc/registry.hpp"

namespace qsc {

struct ReportSummary {
    long checked = 0;  // held + failed + inapplicable
    long held = 0;
    long failed = 0;
    long inapplicable = 0;
    long skipped = 0;
};

struct Report {
    std::string statement;
    int schema_version = 1;
    std::vector<CaseRecord> cases;
};

inline ReportSummary summarize(const Report& r) {
    ReportSummary s;
    for (const auto& c : r.cases) {
        if (c.outcome == "held") ++s.held;
        else if (c.outcome == "failed") ++s.failed;
        else if (c.outcome == "inapplicable") ++s.inapplicable;
        else ++s.skipped;
    }
    s.checked = s.held + s.failed + s.inapplicable;
    return s;
}

namespace detail {

inline nlohmann::json report_json(const Report& r, bool with_timing) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases) {
        nlohmann::json jc;
        jc["detail"] = c.detail;
        jc["modulus_degree"] = c.modulus_degree;
        jc["multiplicities"] = c.multiplicities;
        jc["outcome"] = c.outcome;
        jc["parameters"] = c.parameters;
        jc["residue"] = c.residue;
        jc["statement"] = c.statement;
        if (with_timing) jc["wall_ms"] = c.wall_ms;
        cases.push_back(std::move(jc));
    }
    const ReportSummary s = summarize(r);
    nlohmann::json j;
    j["cases"] = std::move(cases);
    j["schema_version"] = r.schema_version;
    j["statement"] = r.statement;
    j["summary"] = {{"checked", s.checked},
                    {"failed", s.failed},
                    {"held", s.held},
                    {"inapplicable", s.inapplicable},
                    {"skipped", s.skipped}};
    return j;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

inline std::string param_or_empty(const CaseRecord& c, const char* key) {
    auto it = c.parameters.find(key);
    return it == c.parameters.end() ? std::string() : std::to_string(it->second);
}

inline std::string join_mults(const std::vector<int>& ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(ms[i]);
    }
    return out;
}

}  // namespace detail

// Two serializations of the same JSON document: the canonical one omits
// wall-clock fields and is the determinism contract, the plain one keeps
// them for profiling.
inline std::string canonical_json(const Report& r) {
    return detail::report_json(r, false).dump(2) + "\n";
}

inline std::string report_to_json(const Report& r) {
    return detail::report_json(r, true).dump(2) + "\n";
}

inline std::string report_to_csv(const Report& r) {
    std::string out =
        "statement,n,d,r,s,p,e,outcome,detail,modulus_degree,multiplicities,"
        "residue,wall_ms\n";
    for (const auto& c : r.cases) {
        out += detail::csv_field(c.statement) + ',';
        for (const char* key : {"n", "d", "r", "s", "p", "e"})
            out += detail::param_or_empty(c, key) + ',';
        out += c.outcome + ',';
        out += detail::csv_field(c.detail) + ',';
        out += std::to_string(c.modulus_degree) + ',';
        out += detail::join_mults(c.multiplicities) + ',';
        out += detail::csv_field(c.residue) + ',';
        out += std::to_string(c.wall_ms) + '\n';
    }
    return out;
}

inline std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "statement " << r.statement << " (schema " << r.schema_version << ")\n";
    for (const auto& c : r.cases) {
        out << "  " << c.statement;
        for (const auto& [k, v] : c.parameters) out << ' ' << k << '=' << v;
        out << ": " << c.outcome;
        if (!c.detail.empty()) out << " [" << c.detail << "]";
        if (!c.residue.empty()) out << " residue " << c.residue;
        if (!c.multiplicities.empty())
            out << " mult " << detail::join_mults(c.multiplicities);
        out << '\n';
    }
    const ReportSummary s = summarize(r);
    out << "checked " << s.checked << ", held " << s.held << ", failed "
        << s.failed << ", inapplicable " << s.inapplicable << ", skipped "
        << s.skipped << '\n';
    return out.str();
}

inline std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") return report_to_json(r);
    if (format == "csv") return report_to_csv(r);
    if (format == "text") return report_to_text(r);
    throw UsageError("unknown report format: " + format);
}

}  // namespace qsc
