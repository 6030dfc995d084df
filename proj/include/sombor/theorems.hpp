#pragma once

// Bound evaluators for the inequality theorems this library audits.  Each
// evaluator computes both sides of one published inequality on a concrete
// graph and reports whether it holds, whether either side is tight, and
// whether the input was regular (the recurring equality clause).
//
// Two of the statements are audited rather than trusted: the self/complement
// coindex sum bound (T_SELFCOMP_SUM) is false for complete graphs as printed,
// and the edge monotonicity claim (R_EDGE_MONOTONE) fails well beyond its
// degenerate cases.  The evaluators report what the formulas actually do;
// nothing here repairs a statement.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/invariants.hpp"
#include "sombor/io.hpp"

namespace sombor {

enum class TheoremId {
    T_DEGREE_BOUNDS,
    T_M1BAR_BOUND,
    T_M1BAR_COROLLARY,
    T_SO_PLUS_COSO,
    T_SOBAR_COMPLEMENT_PAIR,
    T_SELFCOMP_SUM,
    T_CS_FBAR_UPPER,
    T_PS_FBAR_LOWER,
    T_PS_M1BAR_LOWER,
    T_M2BAR_UPPER,
    T_UNION_BOUNDS,
    T_JOIN_BOUNDS,
    T_CARTESIAN_BOUNDS,
    T_COMPOSITION_BOUNDS,
    R_EDGE_MONOTONE,
};

inline constexpr std::array<TheoremId, 15> kAllTheorems = {
    TheoremId::T_DEGREE_BOUNDS,    TheoremId::T_M1BAR_BOUND,
    TheoremId::T_M1BAR_COROLLARY,  TheoremId::T_SO_PLUS_COSO,
    TheoremId::T_SOBAR_COMPLEMENT_PAIR, TheoremId::T_SELFCOMP_SUM,
    TheoremId::T_CS_FBAR_UPPER,    TheoremId::T_PS_FBAR_LOWER,
    TheoremId::T_PS_M1BAR_LOWER,   TheoremId::T_M2BAR_UPPER,
    TheoremId::T_UNION_BOUNDS,     TheoremId::T_JOIN_BOUNDS,
    TheoremId::T_CARTESIAN_BOUNDS, TheoremId::T_COMPOSITION_BOUNDS,
    TheoremId::R_EDGE_MONOTONE,
};

inline std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T_DEGREE_BOUNDS: return "T_DEGREE_BOUNDS";
        case TheoremId::T_M1BAR_BOUND: return "T_M1BAR_BOUND";
        case TheoremId::T_M1BAR_COROLLARY: return "T_M1BAR_COROLLARY";
        case TheoremId::T_SO_PLUS_COSO: return "T_SO_PLUS_COSO";
        case TheoremId::T_SOBAR_COMPLEMENT_PAIR: return "T_SOBAR_COMPLEMENT_PAIR";
        case TheoremId::T_SELFCOMP_SUM: return "T_SELFCOMP_SUM";
        case TheoremId::T_CS_FBAR_UPPER: return "T_CS_FBAR_UPPER";
        case TheoremId::T_PS_FBAR_LOWER: return "T_PS_FBAR_LOWER";
        case TheoremId::T_PS_M1BAR_LOWER: return "T_PS_M1BAR_LOWER";
        case TheoremId::T_M2BAR_UPPER: return "T_M2BAR_UPPER";
        case TheoremId::T_UNION_BOUNDS: return "T_UNION_BOUNDS";
        case TheoremId::T_JOIN_BOUNDS: return "T_JOIN_BOUNDS";
        case TheoremId::T_CARTESIAN_BOUNDS: return "T_CARTESIAN_BOUNDS";
        case TheoremId::T_COMPOSITION_BOUNDS: return "T_COMPOSITION_BOUNDS";
        case TheoremId::R_EDGE_MONOTONE: return "R_EDGE_MONOTONE";
    }
    throw std::invalid_argument("unknown theorem id");
}

inline std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (TheoremId id : kAllTheorems)
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

/// The four two-graph operation theorems take a pair of inputs; everything
/// else is evaluated on a single graph.
inline bool is_pair_theorem(TheoremId id) {
    return id == TheoremId::T_UNION_BOUNDS || id == TheoremId::T_JOIN_BOUNDS ||
           id == TheoremId::T_CARTESIAN_BOUNDS || id == TheoremId::T_COMPOSITION_BOUNDS;
}

/// One evaluated inequality.  `value` is the quantity the theorem bounds,
/// `lower`/`upper` the bound sides that exist for this theorem.  Gaps are
/// slacks (value - lower, upper - value), zero for absent sides.  When
/// `applicable` is false (degree guard failed) the boolean verdicts carry no
/// information and `not_applicable_reason` says why.
///
/// Verdicts are tolerance-aware: each side uses
/// tol = 1e-9 * max(1, |value|, |bound|), so `holds` forgives only
/// rounding-level overshoot and `equality_*` detects ties at the same scale.
struct BoundRecord {
    TheoremId theorem = TheoremId::T_DEGREE_BOUNDS;
    std::optional<double> lower;
    double value = 0;
    std::optional<double> upper;
    bool applicable = true;
    std::string not_applicable_reason;
    bool holds = false;
    bool equality_lower = false;
    bool equality_upper = false;
    bool is_regular_input = false;
    double gap_lower = 0;
    double gap_upper = 0;
};

/// Audit outcome for one graph (or ordered pair of graphs, for the
/// operation theorems): every record evaluated plus the failing subset.
struct AuditReport {
    std::string graph_id;
    std::vector<BoundRecord> records;
    std::vector<BoundRecord> violations;
};

namespace detail {

inline double bound_tol(double value, double bound) {
    return 1e-9 * std::max({1.0, std::fabs(value), std::fabs(bound)});
}

inline BoundRecord make_record(TheoremId id, std::optional<double> lower, double value,
                               std::optional<double> upper, bool regular) {
    BoundRecord r;
    r.theorem = id;
    r.lower = lower;
    r.value = value;
    r.upper = upper;
    r.is_regular_input = regular;
    r.holds = true;
    if (lower) {
        const double tol = bound_tol(value, *lower);
        r.holds = *lower <= value + tol;
        r.equality_lower = std::fabs(value - *lower) <= tol;
        r.gap_lower = value - *lower;
    }
    if (upper) {
        const double tol = bound_tol(value, *upper);
        r.holds = r.holds && value <= *upper + tol;
        r.equality_upper = std::fabs(*upper - value) <= tol;
        r.gap_upper = *upper - value;
    }
    return r;
}

inline BoundRecord inapplicable_record(TheoremId id, std::string reason, bool regular) {
    BoundRecord r;
    r.theorem = id;
    r.applicable = false;
    r.not_applicable_reason = std::move(reason);
    r.is_regular_input = regular;
    return r;
}

// The individual evaluators work off the shared pair sums so a full audit
// costs one sweep over the vertex pairs.
inline BoundRecord degree_bounds_record(const PairSums& s) {
    const double lo = s.min_degree * static_cast<double>(s.n) * (s.n - 1 - s.max_degree) / sqrt2;
    const double hi = s.max_degree * static_cast<double>(s.n) * (s.n - 1 - s.min_degree) / sqrt2;
    return make_record(TheoremId::T_DEGREE_BOUNDS, lo, s.so_co, hi, s.min_degree == s.max_degree);
}

inline BoundRecord m1bar_bound_record(const PairSums& s) {
    const double hi = static_cast<double>(s.m1_co) - (2.0 - sqrt2) * s.min_degree * s.cm;
    return make_record(TheoremId::T_M1BAR_BOUND, std::nullopt, s.so_co, hi,
                       s.min_degree == s.max_degree);
}

inline BoundRecord m1bar_corollary_record(const PairSums& s) {
    const double hi = 2.0 * s.m * (s.n - 1) - static_cast<double>(s.m1) -
                      (1.0 - 1.0 / sqrt2) * (static_cast<double>(s.n) * (s.n - 1) - 2.0 * s.m) *
                          s.min_degree;
    return make_record(TheoremId::T_M1BAR_COROLLARY, std::nullopt, s.so_co, hi,
                       s.min_degree == s.max_degree);
}

inline BoundRecord so_plus_coso_record(const PairSums& s) {
    const double hi = static_cast<double>(s.n) * (s.n - 1) * s.max_degree / sqrt2;
    return make_record(TheoremId::T_SO_PLUS_COSO, std::nullopt, s.so + s.so_co, hi,
                       s.min_degree == s.max_degree);
}

inline BoundRecord sobar_complement_pair_record(const PairSums& s) {
    const double hi = s.cm * (s.n - 1.0 + s.max_degree - s.min_degree) * sqrt2;
    return make_record(TheoremId::T_SOBAR_COMPLEMENT_PAIR, std::nullopt, s.so_comp + s.so_co, hi,
                       s.min_degree == s.max_degree);
}

inline BoundRecord selfcomp_sum_record(const PairSums& s) {
    const double hi = 2.0 * static_cast<double>(s.m1_co) -
                      (2.0 - sqrt2) * s.min_degree * (static_cast<double>(s.n) * (s.n - 1) / 2.0);
    return make_record(TheoremId::T_SELFCOMP_SUM, std::nullopt, s.so_co + s.so_co_comp, hi,
                       s.min_degree == s.max_degree);
}

inline BoundRecord cs_fbar_upper_record(const PairSums& s) {
    const double hi = std::sqrt(static_cast<double>(s.cm) * static_cast<double>(s.f_co));
    return make_record(TheoremId::T_CS_FBAR_UPPER, std::nullopt, s.so_co, hi,
                       s.min_degree == s.max_degree);
}

inline BoundRecord ps_fbar_lower_record(const PairSums& s) {
    const bool regular = s.min_degree == s.max_degree;
    if (s.min_degree == 0)
        return inapplicable_record(TheoremId::T_PS_FBAR_LOWER, "minimum degree is 0", regular);
    const double ratio = static_cast<double>(s.min_degree) / s.max_degree +
                         static_cast<double>(s.max_degree) / s.min_degree;
    const double lo = std::sqrt(static_cast<double>(s.cm) * static_cast<double>(s.f_co));
    return make_record(TheoremId::T_PS_FBAR_LOWER, lo, 0.5 * ratio * s.so_co, std::nullopt,
                       regular);
}

inline BoundRecord ps_m1bar_lower_record(const PairSums& s) {
    const bool regular = s.min_degree == s.max_degree;
    if (s.min_degree == 0)
        return inapplicable_record(TheoremId::T_PS_M1BAR_LOWER, "minimum degree is 0", regular);
    const double lo = 2.0 * std::sqrt(static_cast<double>(s.cm) * s.max_degree *
                                      static_cast<double>(s.m1_co));
    const double scaled = (1.0 + static_cast<double>(s.max_degree) / s.min_degree) * s.so_co;
    return make_record(TheoremId::T_PS_M1BAR_LOWER, lo, scaled, std::nullopt, regular);
}

inline BoundRecord m2bar_upper_record(const PairSums& s) {
    const bool regular = s.min_degree == s.max_degree;
    if (s.min_degree == 0)
        return inapplicable_record(TheoremId::T_M2BAR_UPPER, "minimum degree is 0", regular);
    const double ratio = static_cast<double>(s.min_degree) / s.max_degree +
                         static_cast<double>(s.max_degree) / s.min_degree;
    const double hi = std::sqrt(ratio * s.cm * static_cast<double>(s.m2_co));
    return make_record(TheoremId::T_M2BAR_UPPER, std::nullopt, s.so_co, hi, regular);
}

/// Copy of g with the pair {u,v} switched between edge and non-edge.
inline Graph with_pair_toggled(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) rows[static_cast<std::size_t>(w)] = g.neighbor_bits(w);
    rows[static_cast<std::size_t>(u)] ^= std::uint64_t{1} << v;
    rows[static_cast<std::size_t>(v)] ^= std::uint64_t{1} << u;
    return Graph(n, std::move(rows));
}

}  // namespace detail

// -- single-graph theorems -------------------------------------------------

/// delta*n*(n-1-Delta)/sqrt(2) <= coindex <= Delta*n*(n-1-delta)/sqrt(2).
inline BoundRecord eval_degree_bounds(const Graph& g) {
    return detail::degree_bounds_record(detail::pair_sums(g));
}

/// coindex <= M1-coindex - (2-sqrt(2))*delta*mbar.
inline BoundRecord eval_m1bar_bound(const Graph& g) {
    return detail::m1bar_bound_record(detail::pair_sums(g));
}

/// coindex <= 2m(n-1) - M1 - (1-1/sqrt(2))*(n(n-1)-2m)*delta.
inline BoundRecord eval_m1bar_corollary(const Graph& g) {
    return detail::m1bar_corollary_record(detail::pair_sums(g));
}

/// index + coindex <= n(n-1)*Delta/sqrt(2).
inline BoundRecord eval_so_plus_coso(const Graph& g) {
    return detail::so_plus_coso_record(detail::pair_sums(g));
}

/// index(complement) + coindex <= mbar*(n-1+Delta-delta)*sqrt(2).
inline BoundRecord eval_sobar_complement_pair(const Graph& g) {
    return detail::sobar_complement_pair_record(detail::pair_sums(g));
}

/// coindex(g) + coindex(complement) <= 2*M1-coindex - (2-sqrt(2))*delta*C(n,2).
/// False as printed for complete graphs; evaluated verbatim and reported.
inline BoundRecord eval_selfcomp_sum(const Graph& g) {
    return detail::selfcomp_sum_record(detail::pair_sums(g));
}

/// coindex <= sqrt(mbar * F-coindex)  (Cauchy-Schwarz).
inline BoundRecord eval_cs_fbar_upper(const Graph& g) {
    return detail::cs_fbar_upper_record(detail::pair_sums(g));
}

/// sqrt(mbar * F-coindex) <= (delta/Delta + Delta/delta)/2 * coindex.
/// Needs delta > 0; otherwise not applicable.
inline BoundRecord eval_ps_fbar_lower(const Graph& g) {
    return detail::ps_fbar_lower_record(detail::pair_sums(g));
}

/// 2*sqrt(mbar * Delta * M1-coindex) <= (1 + Delta/delta) * coindex.
/// Needs delta > 0; otherwise not applicable.
inline BoundRecord eval_ps_m1bar_lower(const Graph& g) {
    return detail::ps_m1bar_lower_record(detail::pair_sums(g));
}

/// coindex <= sqrt((delta/Delta + Delta/delta) * mbar * M2-coindex).
/// Needs delta > 0; otherwise not applicable.
inline BoundRecord eval_m2bar_upper(const Graph& g) {
    return detail::m2bar_upper_record(detail::pair_sums(g));
}

/// Strict edge monotonicity claim: removing any edge strictly increases the
/// coindex, adding any edge strictly decreases it.  `value` carries the worst
/// margin over all single-pair toggles (positive margins are in the claimed
/// direction), `holds` uses a 1e-12 strictness band, and `equality_lower`
/// flags graphs with at least one zero-margin (degenerate) transition.
/// The claim fails on many graphs; this evaluator reports, never repairs.
inline BoundRecord eval_edge_monotonicity(const Graph& g) {
    constexpr double band = 1e-12;
    const int n = g.vertex_count();
    const double base = sombor_coindex(g);
    double worst = 0;
    bool have_margin = false;
    bool all_strict_ok = true;
    bool degenerate = false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double toggled = sombor_coindex(detail::with_pair_toggled(g, u, v));
            // Claimed direction: removal raises the coindex, addition lowers
            // it, so both margins below must come out positive.
            const double margin = g.adjacent(u, v) ? toggled - base : base - toggled;
            worst = have_margin ? std::min(worst, margin) : margin;
            have_margin = true;
            all_strict_ok = all_strict_ok && margin > -band;
            degenerate = degenerate || std::fabs(margin) <= band;
        }
    BoundRecord r;
    r.theorem = TheoremId::R_EDGE_MONOTONE;
    r.lower = 0.0;
    r.value = worst;
    r.holds = all_strict_ok;
    r.equality_lower = degenerate;
    r.is_regular_input = degree_stats(g).is_regular;
    r.gap_lower = worst;
    return r;
}

// -- two-graph operation theorems -------------------------------------------

/// coindex(g1 union g2) against coindex(g1) + coindex(g2) + n1*n2*sqrt(d^2+d^2)
/// with the extremal degrees of either side.
inline BoundRecord eval_union_bounds(const Graph& g1, const Graph& g2) {
    const DegreeStats s1 = degree_stats(g1), s2 = degree_stats(g2);
    const double base = sombor_coindex(g1) + sombor_coindex(g2);
    const double cross = static_cast<double>(g1.vertex_count()) * g2.vertex_count();
    const double lo = base + cross * detail::degree_norm(s1.min_degree, s2.min_degree);
    const double hi = base + cross * detail::degree_norm(s1.max_degree, s2.max_degree);
    return detail::make_record(TheoremId::T_UNION_BOUNDS, lo,
                               sombor_coindex(graph_union(g1, g2)), hi,
                               s1.is_regular && s2.is_regular);
}

/// coindex(g1 join g2) against sqrt(2)*[mbar1*(d1+n2) + mbar2*(d2+n1)] with
/// extremal degrees.
inline BoundRecord eval_join_bounds(const Graph& g1, const Graph& g2) {
    const DegreeStats s1 = degree_stats(g1), s2 = degree_stats(g2);
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    const double lo = detail::sqrt2 * (static_cast<double>(s1.coedge_count) * (s1.min_degree + n2) +
                                       static_cast<double>(s2.coedge_count) * (s2.min_degree + n1));
    const double hi = detail::sqrt2 * (static_cast<double>(s1.coedge_count) * (s1.max_degree + n2) +
                                       static_cast<double>(s2.coedge_count) * (s2.max_degree + n1));
    return detail::make_record(TheoremId::T_JOIN_BOUNDS, lo, sombor_coindex(graph_join(g1, g2)),
                               hi, s1.is_regular && s2.is_regular);
}

/// coindex(g1 box g2) against mbar*sqrt(2)*(d1+d2) with extremal degrees,
/// mbar taken in the product.
inline BoundRecord eval_cartesian_bounds(const Graph& g1, const Graph& g2) {
    const DegreeStats s1 = degree_stats(g1), s2 = degree_stats(g2);
    const Graph product = cartesian_product(g1, g2);
    const double cm = product.coedge_count();
    const double lo = cm * detail::sqrt2 * (s1.min_degree + s2.min_degree);
    const double hi = cm * detail::sqrt2 * (s1.max_degree + s2.max_degree);
    return detail::make_record(TheoremId::T_CARTESIAN_BOUNDS, lo, sombor_coindex(product), hi,
                               s1.is_regular && s2.is_regular);
}

/// coindex(g1[g2]) against mbar*sqrt(2)*(n2*d1+d2) with extremal degrees,
/// mbar taken in the composition.
inline BoundRecord eval_composition_bounds(const Graph& g1, const Graph& g2) {
    const DegreeStats s1 = degree_stats(g1), s2 = degree_stats(g2);
    const int n2 = g2.vertex_count();
    const Graph product = composition(g1, g2);
    const double cm = product.coedge_count();
    const double lo = cm * detail::sqrt2 * (static_cast<double>(n2) * s1.min_degree + s2.min_degree);
    const double hi = cm * detail::sqrt2 * (static_cast<double>(n2) * s1.max_degree + s2.max_degree);
    return detail::make_record(TheoremId::T_COMPOSITION_BOUNDS, lo, sombor_coindex(product), hi,
                               s1.is_regular && s2.is_regular);
}

// -- dispatch and searches ---------------------------------------------------

/// Evaluate any single-graph theorem by id.  Pair theorems are rejected:
/// they need two inputs (see evaluate_pair_theorem).
inline BoundRecord evaluate_theorem(TheoremId id, const Graph& g) {
    if (is_pair_theorem(id))
        throw std::invalid_argument(theorem_name(id) +
                                    " takes two graphs; use evaluate_pair_theorem");
    if (id == TheoremId::R_EDGE_MONOTONE) return eval_edge_monotonicity(g);
    const detail::PairSums s = detail::pair_sums(g);
    switch (id) {
        case TheoremId::T_DEGREE_BOUNDS: return detail::degree_bounds_record(s);
        case TheoremId::T_M1BAR_BOUND: return detail::m1bar_bound_record(s);
        case TheoremId::T_M1BAR_COROLLARY: return detail::m1bar_corollary_record(s);
        case TheoremId::T_SO_PLUS_COSO: return detail::so_plus_coso_record(s);
        case TheoremId::T_SOBAR_COMPLEMENT_PAIR: return detail::sobar_complement_pair_record(s);
        case TheoremId::T_SELFCOMP_SUM: return detail::selfcomp_sum_record(s);
        case TheoremId::T_CS_FBAR_UPPER: return detail::cs_fbar_upper_record(s);
        case TheoremId::T_PS_FBAR_LOWER: return detail::ps_fbar_lower_record(s);
        case TheoremId::T_PS_M1BAR_LOWER: return detail::ps_m1bar_lower_record(s);
        case TheoremId::T_M2BAR_UPPER: return detail::m2bar_upper_record(s);
        default: throw std::invalid_argument("unhandled theorem id");
    }
}

inline BoundRecord evaluate_pair_theorem(TheoremId id, const Graph& g1, const Graph& g2) {
    switch (id) {
        case TheoremId::T_UNION_BOUNDS: return eval_union_bounds(g1, g2);
        case TheoremId::T_JOIN_BOUNDS: return eval_join_bounds(g1, g2);
        case TheoremId::T_CARTESIAN_BOUNDS: return eval_cartesian_bounds(g1, g2);
        case TheoremId::T_COMPOSITION_BOUNDS: return eval_composition_bounds(g1, g2);
        default:
            throw std::invalid_argument(theorem_name(id) +
                                        " takes one graph; use evaluate_theorem");
    }
}

/// Every single-graph inequality evaluated on one graph.  The edge
/// monotonicity remark is not part of the standard audit battery (it is a
/// remark about graph perturbations, not a bound on this graph); run it via
/// evaluate_theorem(R_EDGE_MONOTONE, g) when wanted.
inline AuditReport audit_graph(const Graph& g) {
    const detail::PairSums s = detail::pair_sums(g);
    AuditReport report;
    report.graph_id = encode_graph6(g);
    report.records = {
        detail::degree_bounds_record(s),      detail::m1bar_bound_record(s),
        detail::m1bar_corollary_record(s),    detail::so_plus_coso_record(s),
        detail::sobar_complement_pair_record(s), detail::selfcomp_sum_record(s),
        detail::cs_fbar_upper_record(s),      detail::ps_fbar_lower_record(s),
        detail::ps_m1bar_lower_record(s),     detail::m2bar_upper_record(s),
    };
    for (const BoundRecord& r : report.records)
        if (r.applicable && !r.holds) report.violations.push_back(r);
    return report;
}

/// Sweep every labeled graph on 1..max_n vertices through one single-graph
/// theorem and return a report per violating graph, in enumeration order.
inline std::vector<AuditReport> find_counterexamples(TheoremId theorem, int max_n) {
    if (is_pair_theorem(theorem))
        throw std::invalid_argument(theorem_name(theorem) +
                                    " takes two graphs; use find_pair_counterexamples");
    std::vector<AuditReport> out;
    for (int n = 1; n <= max_n; ++n) {
        LabeledGraphEnumerator en(n);
        while (auto g = en.next()) {
            BoundRecord r = evaluate_theorem(theorem, *g);
            if (r.applicable && !r.holds)
                out.push_back(AuditReport{encode_graph6(*g), {r}, {r}});
        }
    }
    return out;
}

/// Operation-theorem analogue of find_counterexamples: all ordered pairs of
/// labeled graphs with n1, n2 in 1..max_n.  The pair universe is quartic in
/// size and products square the order, so max_n is capped at 4.
inline std::vector<AuditReport> find_pair_counterexamples(TheoremId theorem, int max_n) {
    if (!is_pair_theorem(theorem))
        throw std::invalid_argument(theorem_name(theorem) +
                                    " takes one graph; use find_counterexamples");
    if (max_n < 1 || max_n > 4)
        throw std::invalid_argument("pair search capped at 4 vertices per side, requested " +
                                    std::to_string(max_n));
    std::vector<Graph> universe;
    std::vector<std::string> ids;
    for (int n = 1; n <= max_n; ++n) {
        LabeledGraphEnumerator en(n);
        while (auto g = en.next()) {
            ids.push_back(encode_graph6(*g));
            universe.push_back(std::move(*g));
        }
    }
    std::vector<AuditReport> out;
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = 0; j < universe.size(); ++j) {
            BoundRecord r = evaluate_pair_theorem(theorem, universe[i], universe[j]);
            if (r.applicable && !r.holds)
                out.push_back(AuditReport{ids[i] + " " + ids[j], {r}, {r}});
        }
    return out;
}

}  // namespace sombor
