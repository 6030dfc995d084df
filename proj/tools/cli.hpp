#pragma once

// The `sombor` command line tool.  Five batch subcommands:
//
//   compute    index/coindex vectors for graphs read from a file or stdin
//   family     one generated family member vs its closed-form values
//   ops        union/join/cartesian/composition plus the matching bound check
//   audit      bound records for input graphs, or a counterexample sweep
//              over every labeled graph up to --enumerate-max-n
//   enumerate  all labeled graphs on n vertices as graph6 lines
//
// Data goes to standard output, diagnostics and summaries to standard error.
// Exit codes: 0 success (bound violations are findings, not failures),
// 1 violations found under --strict, 2 bad input or parameters, 3 I/O errors.
//
// Everything lives in this header so the test suite can drive the exact
// production code paths in-process with its own streams.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sombor/closed_forms.hpp"
#include "sombor/graph.hpp"
#include "sombor/invariants.hpp"
#include "sombor/io.hpp"
#include "sombor/report.hpp"
#include "sombor/theorems.hpp"

namespace sombor::cli {

namespace detail {

/// Per-theorem audit counters for the summary lines.
struct TheoremTally {
    long long checked = 0;
    long long held = 0;
    long long equality = 0;
    long long violations = 0;
    long long not_applicable = 0;
};

using TallyMap = std::map<TheoremId, TheoremTally>;

inline void tally_record(TallyMap& tallies, const BoundRecord& r) {
    TheoremTally& t = tallies[r.theorem];
    ++t.checked;
    if (!r.applicable) {
        ++t.not_applicable;
        return;
    }
    if (r.holds)
        ++t.held;
    else
        ++t.violations;
    if (r.equality_lower || r.equality_upper) ++t.equality;
}

inline void print_tallies(std::ostream& err, const TallyMap& tallies) {
    for (TheoremId id : kAllTheorems) {
        const auto it = tallies.find(id);
        if (it == tallies.end()) continue;
        const TheoremTally& t = it->second;
        err << theorem_name(id) << ": checked=" << t.checked << " held=" << t.held
            << " equality=" << t.equality << " violations=" << t.violations
            << " not_applicable=" << t.not_applicable << "\n";
    }
}

inline long long total_violations(const TallyMap& tallies) {
    long long total = 0;
    for (const auto& [id, t] : tallies) total += t.violations;
    return total;
}

/// Quote a free-text CSV field when it needs it (commas, quotes, newlines).
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string json_string(const std::string& s) {
    return "\"" + sombor::detail::json_escape(s) + "\"";
}

/// Resolves "-" to the given stream, anything else to an opened file.
class InputSource {
public:
    InputSource(const std::string& path, std::istream& fallback) {
        if (path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path);
        if (file_.is_open()) stream_ = &file_;
    }

    bool ok() const { return stream_ != nullptr; }
    std::istream& stream() { return *stream_; }

private:
    std::ifstream file_;
    std::istream* stream_ = nullptr;
};

/// Reads graph6 lines (skipping blanks) and hands each parsed graph to fn
/// with its 1-based line number.  Parse failures are reported against the
/// offending line.
template <typename Fn>
void for_each_graph6_line(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            fn(parse_graph6(line), lineno);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
}

/// Collects the input graphs for a subcommand, honoring --format.  An
/// edge-list input is always exactly one graph.
template <typename Fn>
void for_each_input_graph(std::istream& in, const std::string& format, Fn&& fn) {
    if (format == "graph6") {
        for_each_graph6_line(in, fn);
        return;
    }
    std::string text(std::istreambuf_iterator<char>(in), {});
    fn(parse_edge_list(text), std::size_t{1});
}

// -- compute ---------------------------------------------------------------

struct ComputeConfig {
    std::string input = "-";
    std::string format = "graph6";
    std::string output = "json_lines";
};

inline int run_compute(const ComputeConfig& cfg, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    InputSource source(cfg.input, in);
    if (!source.ok()) {
        err << "error: cannot open " << cfg.input << "\n";
        return 3;
    }
    const OutputFormat fmt = *output_format_from_name(cfg.output);
    if (fmt == OutputFormat::csv) out << kIndexCsvHeader << '\n';
    long long count = 0;
    for_each_input_graph(source.stream(), cfg.format, [&](const Graph& g, std::size_t) {
        const IndexRow row{encode_graph6(g), compute_all(g)};
        out << (fmt == OutputFormat::csv ? index_csv_line(row) : index_json_line(row)) << '\n';
        ++count;
    });
    err << "computed " << count << " graph(s)\n";
    return 0;
}

// -- family ----------------------------------------------------------------

struct FamilyConfig {
    std::string name;
    int n = -1;
    int p = -1;
    int q = -1;
    std::string variant = "corrected";
    std::string output = "json_lines";
};

inline int run_family(const FamilyConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto family = family_from_name(cfg.name);
    if (!family) throw std::invalid_argument("unknown family '" + cfg.name + "'");

    FamilySpec spec{*family, 0, 0};
    if (family_is_two_parameter(*family)) {
        if (cfg.p < 0 || cfg.q < 0)
            throw std::invalid_argument(cfg.name + " needs --p and --q");
        spec.p1 = cfg.p;
        spec.p2 = cfg.q;
    } else {
        if (cfg.n < 0) throw std::invalid_argument(cfg.name + " needs --n");
        spec.p1 = cfg.n;
    }
    const FormulaVariant variant = cfg.variant == "as_published" ? FormulaVariant::as_published
                                                                 : FormulaVariant::corrected;

    const Graph g = generate_family(spec);
    const IndexVector values = compute_all(g);
    const std::string id = encode_graph6(g);

    // Closed index formulas exist for four families only; the coindex one
    // covers all eight.
    std::optional<double> closed_so;
    try {
        closed_so = closed_sombor_index(spec);
    } catch (const std::domain_error&) {
    }
    const ClosedFormResult closed_co = closed_sombor_coindex(spec, variant);

    auto differs = [](double a, double b) {
        return std::fabs(a - b) > 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
    };
    const std::optional<double> diff_so =
        closed_so ? std::optional<double>(std::fabs(*closed_so - values.so)) : std::nullopt;
    const double diff_co = std::fabs(closed_co.value - values.so_coindex);
    const bool erratum =
        (closed_so && differs(*closed_so, values.so)) || differs(closed_co.value, values.so_coindex);

    if (*output_format_from_name(cfg.output) == OutputFormat::csv) {
        out << "family,p1,p2,graph_id,so,so_coindex,m1,m1_coindex,m2,m2_coindex,f,f_coindex,"
               "closed_so,closed_so_coindex,variant,abs_diff_so,abs_diff_so_coindex,erratum,note\n";
        out << family_name(spec.family) << ',' << spec.p1 << ','
            << (family_is_two_parameter(spec.family) ? std::to_string(spec.p2) : std::string())
            << ',' << id << ',' << format_real(values.so) << ',' << format_real(values.so_coindex)
            << ',' << format_real(values.m1) << ',' << format_real(values.m1_coindex) << ','
            << format_real(values.m2) << ',' << format_real(values.m2_coindex) << ','
            << format_real(values.f) << ',' << format_real(values.f_coindex) << ','
            << sombor::detail::csv_optional(closed_so) << ',' << format_real(closed_co.value)
            << ',' << variant_name(variant) << ',' << sombor::detail::csv_optional(diff_so) << ','
            << format_real(diff_co) << ',' << (erratum ? "true" : "false") << ','
            << csv_field(closed_co.note) << '\n';
    } else {
        out << "{\"family\":" << json_string(family_name(spec.family)) << ",\"p1\":" << spec.p1;
        if (family_is_two_parameter(spec.family)) out << ",\"p2\":" << spec.p2;
        out << ",\"graph_id\":" << json_string(id) << ",\"so\":" << format_real(values.so)
            << ",\"so_coindex\":" << format_real(values.so_coindex)
            << ",\"m1\":" << format_real(values.m1)
            << ",\"m1_coindex\":" << format_real(values.m1_coindex)
            << ",\"m2\":" << format_real(values.m2)
            << ",\"m2_coindex\":" << format_real(values.m2_coindex)
            << ",\"f\":" << format_real(values.f)
            << ",\"f_coindex\":" << format_real(values.f_coindex)
            << ",\"closed_so\":" << sombor::detail::json_optional(closed_so)
            << ",\"closed_so_coindex\":" << format_real(closed_co.value)
            << ",\"variant\":" << json_string(variant_name(variant))
            << ",\"abs_diff_so\":" << sombor::detail::json_optional(diff_so)
            << ",\"abs_diff_so_coindex\":" << format_real(diff_co)
            << ",\"erratum\":" << (erratum ? "true" : "false")
            << ",\"note\":" << json_string(closed_co.note) << "}\n";
    }
    if (erratum)
        err << "ERRATUM: closed form disagrees with direct computation by "
            << format_real(std::max(diff_co, diff_so.value_or(0.0))) << "\n";
    return 0;
}

// -- ops ---------------------------------------------------------------------

struct OpsConfig {
    std::string op;
    std::string g1;
    std::string g2;
    std::string input = "-";
    std::string output = "json_lines";
};

inline int run_ops(const OpsConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string text1 = cfg.g1, text2 = cfg.g2;
    if (text1.empty() != text2.empty())
        throw std::invalid_argument("--g1 and --g2 must be given together");
    if (text1.empty()) {
        InputSource source(cfg.input, in);
        if (!source.ok()) {
            err << "error: cannot open " << cfg.input << "\n";
            return 3;
        }
        std::vector<std::string> lines;
        std::string line;
        while (lines.size() < 2 && std::getline(source.stream(), line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
        if (lines.size() != 2)
            throw ParseError("expected two graph6 lines, got " + std::to_string(lines.size()));
        text1 = lines[0];
        text2 = lines[1];
    }
    const Graph g1 = parse_graph6(text1);
    const Graph g2 = parse_graph6(text2);

    Graph result = [&] {
        if (cfg.op == "union") return graph_union(g1, g2);
        if (cfg.op == "join") return graph_join(g1, g2);
        if (cfg.op == "cartesian") return cartesian_product(g1, g2);
        if (cfg.op == "composition") return composition(g1, g2);
        throw std::invalid_argument("unknown operation '" + cfg.op + "'");
    }();
    const TheoremId theorem = cfg.op == "union"       ? TheoremId::T_UNION_BOUNDS
                              : cfg.op == "join"      ? TheoremId::T_JOIN_BOUNDS
                              : cfg.op == "cartesian" ? TheoremId::T_CARTESIAN_BOUNDS
                                                      : TheoremId::T_COMPOSITION_BOUNDS;
    const BoundRecord record = evaluate_pair_theorem(theorem, g1, g2);
    const std::string id = encode_graph6(result);
    const double coindex = sombor_coindex(result);

    if (*output_format_from_name(cfg.output) == OutputFormat::csv) {
        out << "op,g1,g2,graph_id,so_coindex,theorem,lower,value,upper,applicable,"
               "not_applicable_reason,holds,equality_lower,equality_upper,is_regular_input,"
               "gap_lower,gap_upper\n";
        // audit_csv_line supplies the record columns; the leading composite
        // stands in for its graph_id slot to yield graph_id,so_coindex.
        out << cfg.op << ',' << text1 << ',' << text2 << ','
            << audit_csv_line(id + "," + format_real(coindex), record) << '\n';
    } else {
        out << "{\"op\":" << json_string(cfg.op) << ",\"g1\":" << json_string(text1)
            << ",\"g2\":" << json_string(text2) << ",\"graph_id\":" << json_string(id)
            << ",\"so_coindex\":" << format_real(coindex)
            << ",\"record\":" << bound_record_json(record) << "}\n";
    }
    if (record.applicable && !record.holds)
        err << "violation: " << theorem_name(theorem) << " fails on this pair\n";
    return 0;
}

// -- audit ---------------------------------------------------------------------

struct AuditConfig {
    std::string input = "-";
    std::string format = "graph6";
    std::string output = "json_lines";
    std::string theorem = "all";
    int enumerate_max_n = 0;  // 0 = audit input graphs instead
    bool strict = false;
};

inline int run_audit(const AuditConfig& cfg, std::istream& in, std::ostream& out,
                     std::ostream& err) {
    const OutputFormat fmt = *output_format_from_name(cfg.output);
    std::optional<TheoremId> only;
    if (cfg.theorem != "all") {
        only = theorem_from_name(cfg.theorem);
        if (!only) throw std::invalid_argument("unknown theorem '" + cfg.theorem + "'");
    }

    if (fmt == OutputFormat::csv) out << kAuditCsvHeader << '\n';
    TallyMap tallies;
    auto emit = [&](const AuditReport& report) {
        if (fmt == OutputFormat::csv) {
            for (const BoundRecord& r : report.records) out << audit_csv_line(report.graph_id, r) << '\n';
        } else {
            out << audit_json_line(report) << '\n';
        }
    };

    if (cfg.enumerate_max_n > 0) {
        // Counterexample sweep: only violating graphs are emitted, the
        // summary counts everything that was checked.
        if (only && is_pair_theorem(*only)) {
            if (cfg.enumerate_max_n > 4)
                throw std::invalid_argument("pair-theorem sweeps are capped at "
                                            "--enumerate-max-n 4");
            std::vector<Graph> universe;
            std::vector<std::string> ids;
            for (int n = 1; n <= cfg.enumerate_max_n; ++n) {
                LabeledGraphEnumerator en(n);
                while (auto g = en.next()) {
                    ids.push_back(encode_graph6(*g));
                    universe.push_back(std::move(*g));
                }
            }
            for (std::size_t i = 0; i < universe.size(); ++i)
                for (std::size_t j = 0; j < universe.size(); ++j) {
                    BoundRecord r = evaluate_pair_theorem(*only, universe[i], universe[j]);
                    tally_record(tallies, r);
                    if (r.applicable && !r.holds)
                        emit(AuditReport{ids[i] + " " + ids[j], {r}, {r}});
                }
        } else {
            for (int n = 1; n <= cfg.enumerate_max_n; ++n) {
                LabeledGraphEnumerator en(n);
                while (auto g = en.next()) {
                    if (only) {
                        BoundRecord r = evaluate_theorem(*only, *g);
                        tally_record(tallies, r);
                        if (r.applicable && !r.holds) {
                            const std::string id = encode_graph6(*g);
                            emit(AuditReport{id, {r}, {r}});
                        }
                    } else {
                        AuditReport report = audit_graph(*g);
                        for (const BoundRecord& r : report.records) tally_record(tallies, r);
                        if (!report.violations.empty())
                            emit(AuditReport{report.graph_id, report.violations, report.violations});
                    }
                }
            }
        }
    } else {
        InputSource source(cfg.input, in);
        if (!source.ok()) {
            err << "error: cannot open " << cfg.input << "\n";
            return 3;
        }
        if (only && is_pair_theorem(*only)) {
            std::vector<Graph> graphs;
            for_each_input_graph(source.stream(), cfg.format,
                                 [&](Graph g, std::size_t) { graphs.push_back(std::move(g)); });
            if (graphs.size() != 2)
                throw std::invalid_argument(theorem_name(*only) + " audits exactly two graphs, got " +
                                            std::to_string(graphs.size()));
            BoundRecord r = evaluate_pair_theorem(*only, graphs[0], graphs[1]);
            tally_record(tallies, r);
            AuditReport report{encode_graph6(graphs[0]) + " " + encode_graph6(graphs[1]), {r}, {}};
            if (r.applicable && !r.holds) report.violations.push_back(r);
            emit(report);
        } else {
            for_each_input_graph(source.stream(), cfg.format, [&](const Graph& g, std::size_t) {
                AuditReport report;
                if (only) {
                    BoundRecord r = evaluate_theorem(*only, g);
                    report.graph_id = encode_graph6(g);
                    report.records.push_back(r);
                    if (r.applicable && !r.holds) report.violations.push_back(r);
                } else {
                    report = audit_graph(g);
                }
                for (const BoundRecord& r : report.records) tally_record(tallies, r);
                emit(report);
            });
        }
    }

    print_tallies(err, tallies);
    const long long violations = total_violations(tallies);
    err << "total violations: " << violations << "\n";
    return cfg.strict && violations > 0 ? 1 : 0;
}

// -- enumerate -------------------------------------------------------------

inline int run_enumerate(int n, std::ostream& out) {
    LabeledGraphEnumerator en(n);
    while (auto g = en.next()) out << encode_graph6(*g) << '\n';
    return 0;
}

}  // namespace detail

/// Entry point shared by main() and the test suite.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Sombor index/coindex calculator and bound auditor"};
    app.require_subcommand(1);

    detail::ComputeConfig compute_cfg;
    CLI::App* compute = app.add_subcommand("compute", "index vectors for input graphs");
    compute->add_option("-i,--input", compute_cfg.input, "input path or '-' for stdin");
    compute->add_option("-f,--format", compute_cfg.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    compute->add_option("-o,--output", compute_cfg.output, "output format")
        ->check(CLI::IsMember({"json_lines", "csv"}));

    detail::FamilyConfig family_cfg;
    CLI::App* family = app.add_subcommand("family", "generate a family member, compare closed forms");
    family->add_option("--name", family_cfg.name, "family name")->required();
    family->add_option("--n", family_cfg.n, "vertex-count parameter");
    family->add_option("--p", family_cfg.p, "first parameter (two-parameter families)");
    family->add_option("--q", family_cfg.q, "second parameter (two-parameter families)");
    family->add_option("--variant", family_cfg.variant, "closed-form variant")
        ->check(CLI::IsMember({"as_published", "corrected"}));
    family->add_option("-o,--output", family_cfg.output, "output format")
        ->check(CLI::IsMember({"json_lines", "csv"}));

    detail::OpsConfig ops_cfg;
    CLI::App* ops = app.add_subcommand("ops", "binary graph operation plus its bound record");
    ops->add_option("--op", ops_cfg.op, "operation")
        ->required()
        ->check(CLI::IsMember({"union", "join", "cartesian", "composition"}));
    ops->add_option("--g1", ops_cfg.g1, "first operand (graph6)");
    ops->add_option("--g2", ops_cfg.g2, "second operand (graph6)");
    ops->add_option("-i,--input", ops_cfg.input, "fallback input with two graph6 lines");
    ops->add_option("-o,--output", ops_cfg.output, "output format")
        ->check(CLI::IsMember({"json_lines", "csv"}));

    detail::AuditConfig audit_cfg;
    CLI::App* audit = app.add_subcommand("audit", "evaluate bound records / sweep for counterexamples");
    audit->add_option("-i,--input", audit_cfg.input, "input path or '-' for stdin");
    audit->add_option("-f,--format", audit_cfg.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    audit->add_option("-o,--output", audit_cfg.output, "output format")
        ->check(CLI::IsMember({"json_lines", "csv"}));
    audit->add_option("--theorem", audit_cfg.theorem, "theorem id or 'all'");
    audit->add_option("--enumerate-max-n", audit_cfg.enumerate_max_n,
                      "sweep all labeled graphs up to this order instead of reading input")
        ->check(CLI::Range(1, 7));
    audit->add_flag("--strict", audit_cfg.strict, "exit 1 when any violation is found");

    int enumerate_n = 0;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list all labeled graphs as graph6");
    enumerate->add_option("--n", enumerate_n, "vertex count")->required()->check(CLI::Range(1, 7));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*compute) return detail::run_compute(compute_cfg, in, out, err);
        if (*family) return detail::run_family(family_cfg, out, err);
        if (*ops) return detail::run_ops(ops_cfg, in, out, err);
        if (*audit) return detail::run_audit(audit_cfg, in, out, err);
        if (*enumerate) return detail::run_enumerate(enumerate_n, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace sombor::cli
