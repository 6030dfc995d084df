#pragma once

// CSV and JSON-lines rendering of index rows and audit reports.  All reals
// are printed with 12 significant digits so identical runs produce identical
// bytes and the two formats reparse to equal values.
//
// Fixed CSV headers:
//   index rows:    graph_id,so,so_coindex,m1,m1_coindex,m2,m2_coindex,f,f_coindex
//   audit reports: graph_id,theorem,lower,value,upper,applicable,
//                  not_applicable_reason,holds,equality_lower,equality_upper,
//                  is_regular_input,gap_lower,gap_upper
// A report with k records becomes k CSV lines sharing the graph_id.  Absent
// bounds and the verdict columns of inapplicable records are left empty in
// CSV and null in JSON.  Field values here never contain commas or quotes
// (graph6 bytes sit in 63..126, theorem names and reasons are fixed text),
// so no CSV quoting is performed.

#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "sombor/invariants.hpp"
#include "sombor/theorems.hpp"

namespace sombor {

enum class OutputFormat { json_lines, csv };

inline std::optional<OutputFormat> output_format_from_name(std::string_view name) {
    if (name == "json_lines") return OutputFormat::json_lines;
    if (name == "csv") return OutputFormat::csv;
    return std::nullopt;
}

/// One computed graph: its graph6 identity plus every invariant.
struct IndexRow {
    std::string graph_id;
    IndexVector values;
};

inline constexpr std::string_view kIndexCsvHeader =
    "graph_id,so,so_coindex,m1,m1_coindex,m2,m2_coindex,f,f_coindex";

inline constexpr std::string_view kAuditCsvHeader =
    "graph_id,theorem,lower,value,upper,applicable,not_applicable_reason,holds,"
    "equality_lower,equality_upper,is_regular_input,gap_lower,gap_upper";

/// 12-significant-digit rendering used for every real in every report.
inline std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace detail {

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string csv_optional(const std::optional<double>& x) {
    return x ? format_real(*x) : std::string();
}

inline std::string json_optional(const std::optional<double>& x) {
    return x ? format_real(*x) : std::string("null");
}

inline const char* json_bool(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline std::string index_csv_line(const IndexRow& row) {
    const IndexVector& v = row.values;
    return row.graph_id + "," + format_real(v.so) + "," + format_real(v.so_coindex) + "," +
           format_real(v.m1) + "," + format_real(v.m1_coindex) + "," + format_real(v.m2) + "," +
           format_real(v.m2_coindex) + "," + format_real(v.f) + "," + format_real(v.f_coindex);
}

inline std::string index_json_line(const IndexRow& row) {
    const IndexVector& v = row.values;
    return "{\"graph_id\":\"" + detail::json_escape(row.graph_id) +
           "\",\"so\":" + format_real(v.so) + ",\"so_coindex\":" + format_real(v.so_coindex) +
           ",\"m1\":" + format_real(v.m1) + ",\"m1_coindex\":" + format_real(v.m1_coindex) +
           ",\"m2\":" + format_real(v.m2) + ",\"m2_coindex\":" + format_real(v.m2_coindex) +
           ",\"f\":" + format_real(v.f) + ",\"f_coindex\":" + format_real(v.f_coindex) + "}";
}

/// One CSV line for one record of a report (graph_id repeated per record).
inline std::string audit_csv_line(std::string_view graph_id, const BoundRecord& r) {
    std::string out;
    out += graph_id;
    out += "," + theorem_name(r.theorem);
    out += "," + detail::csv_optional(r.lower);
    out += "," + format_real(r.value);
    out += "," + detail::csv_optional(r.upper);
    out += std::string(",") + (r.applicable ? "true" : "false");
    out += "," + r.not_applicable_reason;
    if (r.applicable) {
        out += std::string(",") + (r.holds ? "true" : "false");
        out += std::string(",") + (r.equality_lower ? "true" : "false");
        out += std::string(",") + (r.equality_upper ? "true" : "false");
    } else {
        out += ",,,";
    }
    out += std::string(",") + (r.is_regular_input ? "true" : "false");
    out += "," + format_real(r.gap_lower);
    out += "," + format_real(r.gap_upper);
    return out;
}

inline std::string bound_record_json(const BoundRecord& r) {
    std::string out = "{\"theorem\":\"" + theorem_name(r.theorem) + "\"";
    out += ",\"lower\":" + detail::json_optional(r.lower);
    out += ",\"value\":" + format_real(r.value);
    out += ",\"upper\":" + detail::json_optional(r.upper);
    out += std::string(",\"applicable\":") + detail::json_bool(r.applicable);
    out += ",\"not_applicable_reason\":\"" + detail::json_escape(r.not_applicable_reason) + "\"";
    if (r.applicable) {
        out += std::string(",\"holds\":") + detail::json_bool(r.holds);
        out += std::string(",\"equality_lower\":") + detail::json_bool(r.equality_lower);
        out += std::string(",\"equality_upper\":") + detail::json_bool(r.equality_upper);
    } else {
        out += ",\"holds\":null,\"equality_lower\":null,\"equality_upper\":null";
    }
    out += std::string(",\"is_regular_input\":") + detail::json_bool(r.is_regular_input);
    out += ",\"gap_lower\":" + format_real(r.gap_lower);
    out += ",\"gap_upper\":" + format_real(r.gap_upper);
    return out + "}";
}

/// Whole report as one JSON line; `violations` lists the failing theorem
/// names, the full failing records are already present under `records`.
inline std::string audit_json_line(const AuditReport& report) {
    std::string out = "{\"graph_id\":\"" + detail::json_escape(report.graph_id) + "\",\"records\":[";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        if (i) out += ",";
        out += bound_record_json(report.records[i]);
    }
    out += "],\"violations\":[";
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
        if (i) out += ",";
        out += "\"" + theorem_name(report.violations[i].theorem) + "\"";
    }
    return out + "]}";
}

inline void write_index_rows(std::ostream& os, std::span<const IndexRow> rows, OutputFormat fmt) {
    if (fmt == OutputFormat::csv) os << kIndexCsvHeader << '\n';
    for (const IndexRow& row : rows)
        os << (fmt == OutputFormat::csv ? index_csv_line(row) : index_json_line(row)) << '\n';
}

inline void write_audit_reports(std::ostream& os, std::span<const AuditReport> reports,
                                OutputFormat fmt) {
    if (fmt == OutputFormat::csv) os << kAuditCsvHeader << '\n';
    for (const AuditReport& report : reports) {
        if (fmt == OutputFormat::csv) {
            for (const BoundRecord& r : report.records)
                os << audit_csv_line(report.graph_id, r) << '\n';
        } else {
            os << audit_json_line(report) << '\n';
        }
    }
}

}  // namespace sombor
