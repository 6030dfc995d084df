#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sombor/graph.hpp"
#include "sombor/invariants.hpp"
#include "sombor/io.hpp"
#include "sombor/theorems.hpp"

using namespace sombor;
using Catch::Matchers::WithinAbs;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);

Graph family(Family f, int a, int b = 0) { return generate_family({f, a, b}); }

// Mirror of the record tolerance, for checking verdicts from outside.
double tol_of(double value, double bound) {
    return 1e-9 * std::max({1.0, std::fabs(value), std::fabs(bound)});
}

}  // namespace

TEST_CASE("theorem ids round-trip through their names") {
    for (TheoremId id : kAllTheorems) CHECK(theorem_from_name(theorem_name(id)) == id);
    CHECK_FALSE(theorem_from_name("T_BOGUS").has_value());
    CHECK(is_pair_theorem(TheoremId::T_UNION_BOUNDS));
    CHECK_FALSE(is_pair_theorem(TheoremId::T_DEGREE_BOUNDS));
    CHECK_FALSE(is_pair_theorem(TheoremId::R_EDGE_MONOTONE));
}

TEST_CASE("degree bounds record") {
    SECTION("regular graph is tight on both sides") {
        const BoundRecord r = eval_degree_bounds(family(Family::cycle, 5));
        CHECK(r.applicable);
        CHECK(r.holds);
        CHECK(r.equality_lower);
        CHECK(r.equality_upper);
        CHECK(r.is_regular_input);
        CHECK_THAT(r.value, WithinAbs(10 * kSqrt2, 1e-12));
        CHECK_THAT(*r.lower, WithinAbs(10 * kSqrt2, 1e-12));
        CHECK_THAT(*r.upper, WithinAbs(10 * kSqrt2, 1e-12));
    }
    SECTION("path sits strictly between the bounds") {
        const BoundRecord r = eval_degree_bounds(family(Family::path, 4));
        CHECK_THAT(*r.lower, WithinAbs(2 * kSqrt2, 1e-12));
        CHECK_THAT(r.value, WithinAbs(kSqrt2 + 2 * kSqrt5, 1e-12));
        CHECK_THAT(*r.upper, WithinAbs(8 * kSqrt2, 1e-12));
        CHECK(r.holds);
        CHECK_FALSE(r.equality_lower);
        CHECK_FALSE(r.equality_upper);
        CHECK_FALSE(r.is_regular_input);
        CHECK_THAT(r.gap_lower, WithinAbs(r.value - *r.lower, 1e-15));
        CHECK_THAT(r.gap_upper, WithinAbs(*r.upper - r.value, 1e-15));
    }
    SECTION("complete graph collapses to zero") {
        const BoundRecord r = eval_degree_bounds(family(Family::complete, 4));
        CHECK(r.value == 0.0);
        CHECK(*r.lower == 0.0);
        CHECK(*r.upper == 0.0);
        CHECK(r.equality_lower);
        CHECK(r.equality_upper);
    }
}

TEST_CASE("first Zagreb coindex bound and its corollary") {
    SECTION("tight on the 5-cycle") {
        const BoundRecord r = eval_m1bar_bound(family(Family::cycle, 5));
        CHECK_THAT(*r.upper, WithinAbs(10 * kSqrt2, 1e-12));
        CHECK(r.equality_upper);
        const BoundRecord c = eval_m1bar_corollary(family(Family::cycle, 5));
        CHECK_THAT(*c.upper, WithinAbs(10 * kSqrt2, 1e-12));
        CHECK(c.equality_upper);
    }
    SECTION("tight on the 3-path without regularity") {
        // all non-adjacent pairs have both endpoint degrees equal to the
        // minimum, which is the actual equality condition
        const BoundRecord r = eval_m1bar_bound(family(Family::path, 3));
        CHECK_THAT(r.value, WithinAbs(kSqrt2, 1e-12));
        CHECK_THAT(*r.upper, WithinAbs(kSqrt2, 1e-12));
        CHECK(r.equality_upper);
        CHECK_FALSE(r.is_regular_input);
    }
    SECTION("strict on the 4-path") {
        const BoundRecord r = eval_m1bar_corollary(family(Family::path, 4));
        CHECK_THAT(*r.upper, WithinAbs(2 + 3 * kSqrt2, 1e-12));
        CHECK(r.holds);
        CHECK_FALSE(r.equality_upper);
        CHECK_FALSE(r.lower.has_value());
    }
}

TEST_CASE("index plus coindex bound") {
    const BoundRecord c5 = eval_so_plus_coso(family(Family::cycle, 5));
    CHECK_THAT(c5.value, WithinAbs(20 * kSqrt2, 1e-12));
    CHECK_THAT(*c5.upper, WithinAbs(20 * kSqrt2, 1e-12));
    CHECK(c5.equality_upper);

    const BoundRecord empty4 = eval_so_plus_coso(Graph(4));
    CHECK(empty4.value == 0.0);
    CHECK(*empty4.upper == 0.0);
    CHECK(empty4.holds);

    const BoundRecord p4 = eval_so_plus_coso(family(Family::path, 4));
    CHECK_THAT(p4.value, WithinAbs(3 * kSqrt2 + 4 * kSqrt5, 1e-12));
    CHECK_THAT(*p4.upper, WithinAbs(12 * kSqrt2, 1e-12));
    CHECK(p4.holds);
}

TEST_CASE("complement index plus coindex bound") {
    const BoundRecord c5 = eval_sobar_complement_pair(family(Family::cycle, 5));
    CHECK_THAT(c5.value, WithinAbs(20 * kSqrt2, 1e-12));
    CHECK_THAT(*c5.upper, WithinAbs(20 * kSqrt2, 1e-12));
    CHECK(c5.equality_upper);

    const BoundRecord k4 = eval_sobar_complement_pair(family(Family::complete, 4));
    CHECK(k4.value == 0.0);
    CHECK(*k4.upper == 0.0);

    const BoundRecord p4 = eval_sobar_complement_pair(family(Family::path, 4));
    CHECK_THAT(p4.value, WithinAbs(3 * kSqrt2 + 4 * kSqrt5, 1e-12));
    CHECK_THAT(*p4.upper, WithinAbs(12 * kSqrt2, 1e-12));
    CHECK(p4.holds);
}

TEST_CASE("self plus complement coindex bound is false as printed") {
    SECTION("the single edge violates it") {
        const BoundRecord r = eval_selfcomp_sum(parse_graph6("A_"));
        CHECK(r.value == 0.0);
        CHECK_THAT(*r.upper, WithinAbs(kSqrt2 - 2, 1e-12));
        CHECK(r.applicable);
        CHECK_FALSE(r.holds);
    }
    SECTION("the triangle violates it harder") {
        const BoundRecord r = eval_selfcomp_sum(family(Family::complete, 3));
        CHECK(r.value == 0.0);
        CHECK_THAT(*r.upper, WithinAbs(-6 * (2 - kSqrt2), 1e-12));
        CHECK_FALSE(r.holds);
    }
    SECTION("it holds with equality on the self-complementary-friendly 5-cycle") {
        const BoundRecord r = eval_selfcomp_sum(family(Family::cycle, 5));
        CHECK_THAT(r.value, WithinAbs(20 * kSqrt2, 1e-12));
        CHECK_THAT(*r.upper, WithinAbs(20 * kSqrt2, 1e-12));
        CHECK(r.holds);
        CHECK(r.equality_upper);
    }
    SECTION("edgeless graphs satisfy it trivially") {
        const BoundRecord r = eval_selfcomp_sum(Graph(4));
        CHECK(r.value == 0.0);
        CHECK(*r.upper == 0.0);
        CHECK(r.holds);
    }
}

TEST_CASE("Cauchy-Schwarz coindex upper bound") {
    const BoundRecord c5 = eval_cs_fbar_upper(family(Family::cycle, 5));
    CHECK_THAT(*c5.upper, WithinAbs(std::sqrt(200.0), 1e-12));
    CHECK(c5.equality_upper);

    const BoundRecord p4 = eval_cs_fbar_upper(family(Family::path, 4));
    CHECK_THAT(*p4.upper, WithinAbs(6.0, 1e-12));
    CHECK(p4.holds);
    CHECK_FALSE(p4.equality_upper);

    const BoundRecord k4 = eval_cs_fbar_upper(family(Family::complete, 4));
    CHECK(k4.value == 0.0);
    CHECK(*k4.upper == 0.0);
}

TEST_CASE("reverse Cauchy-Schwarz lower bounds need positive minimum degree") {
    SECTION("forgotten-coindex form") {
        const BoundRecord c5 = eval_ps_fbar_lower(family(Family::cycle, 5));
        CHECK_THAT(*c5.lower, WithinAbs(std::sqrt(200.0), 1e-12));
        CHECK_THAT(c5.value, WithinAbs(10 * kSqrt2, 1e-12));
        CHECK(c5.equality_lower);

        const BoundRecord p4 = eval_ps_fbar_lower(family(Family::path, 4));
        CHECK_THAT(*p4.lower, WithinAbs(6.0, 1e-12));
        CHECK_THAT(p4.value, WithinAbs(1.25 * (kSqrt2 + 2 * kSqrt5), 1e-12));
        CHECK(p4.holds);

        const BoundRecord guarded = eval_ps_fbar_lower(graph_union(family(Family::cycle, 3), Graph(1)));
        CHECK_FALSE(guarded.applicable);
        CHECK(guarded.not_applicable_reason == "minimum degree is 0");
        CHECK_FALSE(guarded.holds);
        CHECK_FALSE(guarded.equality_lower);
    }
    SECTION("first-Zagreb-coindex form") {
        const BoundRecord c5 = eval_ps_m1bar_lower(family(Family::cycle, 5));
        CHECK_THAT(*c5.lower, WithinAbs(20 * kSqrt2, 1e-12));
        CHECK_THAT(c5.value, WithinAbs(20 * kSqrt2, 1e-12));
        CHECK(c5.equality_lower);

        const BoundRecord p4 = eval_ps_m1bar_lower(family(Family::path, 4));
        CHECK_THAT(*p4.lower, WithinAbs(8 * kSqrt3, 1e-12));
        CHECK_THAT(p4.value, WithinAbs(3 * (kSqrt2 + 2 * kSqrt5), 1e-12));
        CHECK(p4.holds);

        const BoundRecord guarded = eval_ps_m1bar_lower(graph_union(family(Family::star, 4), Graph(1)));
        CHECK_FALSE(guarded.applicable);
    }
    SECTION("second-Zagreb-coindex form") {
        const BoundRecord c5 = eval_m2bar_upper(family(Family::cycle, 5));
        CHECK_THAT(*c5.upper, WithinAbs(std::sqrt(200.0), 1e-12));
        CHECK(c5.equality_upper);

        const BoundRecord p4 = eval_m2bar_upper(family(Family::path, 4));
        CHECK_THAT(*p4.upper, WithinAbs(std::sqrt(37.5), 1e-12));
        CHECK(p4.holds);

        const BoundRecord guarded = eval_m2bar_upper(graph_union(family(Family::complete, 2), Graph(1)));
        CHECK_FALSE(guarded.applicable);
        CHECK(guarded.not_applicable_reason == "minimum degree is 0");
    }
}

TEST_CASE("edge monotonicity claim evaluated faithfully") {
    SECTION("single edge: margin zero, flagged, not a strict failure") {
        const BoundRecord r = eval_edge_monotonicity(parse_graph6("A_"));
        CHECK(r.holds);
        CHECK(r.equality_lower);
        CHECK(r.value == 0.0);
    }
    SECTION("one vertex: no transitions at all") {
        const BoundRecord r = eval_edge_monotonicity(Graph(1));
        CHECK(r.holds);
        CHECK_FALSE(r.equality_lower);
        CHECK(r.value == 0.0);
    }
    SECTION("the 5-cycle already breaks the removal direction") {
        // deleting any edge of C5 leaves P5, whose coindex is smaller
        const BoundRecord r = eval_edge_monotonicity(family(Family::cycle, 5));
        CHECK_FALSE(r.holds);
        CHECK_THAT(r.value, WithinAbs(4 * kSqrt5 - 7 * kSqrt2, 1e-12));
        CHECK_FALSE(r.equality_lower);
    }
    SECTION("the 4-star breaks the addition direction") {
        // removals behave (margin 4 - 2*sqrt(2) > 0) but adding a leaf-leaf
        // edge raises the coindex instead of lowering it
        const BoundRecord r = eval_edge_monotonicity(family(Family::star, 4));
        CHECK_FALSE(r.holds);
        CHECK_THAT(r.value, WithinAbs(3 * kSqrt2 - 2 * kSqrt5, 1e-12));
    }
    SECTION("the 4-path breaks in both directions") {
        const BoundRecord r = eval_edge_monotonicity(family(Family::path, 4));
        CHECK_FALSE(r.holds);
        CHECK_THAT(r.value, WithinAbs(4 - 2 * kSqrt5, 1e-12));
    }
}

TEST_CASE("single-graph audit battery") {
    SECTION("5-cycle: ten records, no violations, tight nearly everywhere") {
        const AuditReport report = audit_graph(family(Family::cycle, 5));
        CHECK(report.graph_id == "Dhc");
        CHECK(report.records.size() == 10);
        CHECK(report.violations.empty());
        int tight = 0;
        for (const BoundRecord& r : report.records)
            if (r.applicable && (r.equality_lower || r.equality_upper)) ++tight;
        CHECK(tight >= 8);
    }
    SECTION("single edge: exactly the self-complement sum fails") {
        const AuditReport report = audit_graph(parse_graph6("A_"));
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].theorem == TheoremId::T_SELFCOMP_SUM);
    }
    SECTION("one vertex: everything trivial or guarded, nothing violated") {
        const AuditReport report = audit_graph(Graph(1));
        CHECK(report.graph_id == "@");
        CHECK(report.records.size() == 10);
        CHECK(report.violations.empty());
        for (const BoundRecord& r : report.records)
            if (!r.applicable) CHECK_FALSE(r.not_applicable_reason.empty());
    }
}

TEST_CASE("counterexample search returns the exact violating set") {
    SECTION("self plus complement sum on up to 3 vertices") {
        const auto reports = find_counterexamples(TheoremId::T_SELFCOMP_SUM, 3);
        std::vector<std::string> ids;
        for (const AuditReport& r : reports) ids.push_back(r.graph_id);
        CHECK(ids == std::vector<std::string>{"A_", "Bo", "Bg", "BW", "Bw"});

        CHECK_THAT(*reports.front().records[0].upper, WithinAbs(kSqrt2 - 2, 1e-12));
        CHECK_THAT(*reports.back().records[0].upper, WithinAbs(-6 * (2 - kSqrt2), 1e-12));

        // the search agrees with re-deriving the set straight from the formula
        std::vector<std::string> expected;
        for (int n = 1; n <= 3; ++n) {
            LabeledGraphEnumerator en(n);
            while (auto g = en.next()) {
                const auto deg = oracle::degrees(*g);
                const int delta = *std::min_element(deg.begin(), deg.end());
                const double lhs = oracle::so_coindex(*g) + oracle::so_coindex(complement(*g));
                const double rhs = 2 * oracle::m1_coindex(*g) -
                                   (2 - kSqrt2) * delta * (n * (n - 1) / 2.0);
                if (lhs > rhs + tol_of(lhs, rhs)) expected.push_back(encode_graph6(*g));
            }
        }
        CHECK(ids == expected);
    }
    SECTION("violation counts grow with the universe") {
        CHECK(find_counterexamples(TheoremId::T_SELFCOMP_SUM, 1).empty());
        CHECK(find_counterexamples(TheoremId::T_SELFCOMP_SUM, 2).size() == 1);
        CHECK(find_counterexamples(TheoremId::T_SELFCOMP_SUM, 4).size() == 31);
        CHECK(find_counterexamples(TheoremId::T_SELFCOMP_SUM, 5).size() == 387);
    }
    SECTION("the provable bounds have no counterexamples on up to 5 vertices") {
        for (TheoremId id :
             {TheoremId::T_DEGREE_BOUNDS, TheoremId::T_M1BAR_BOUND, TheoremId::T_M1BAR_COROLLARY,
              TheoremId::T_SO_PLUS_COSO, TheoremId::T_SOBAR_COMPLEMENT_PAIR,
              TheoremId::T_CS_FBAR_UPPER, TheoremId::T_PS_FBAR_LOWER, TheoremId::T_PS_M1BAR_LOWER,
              TheoremId::T_M2BAR_UPPER})
            CHECK(find_counterexamples(id, 5).empty());
    }
    SECTION("edge monotonicity counterexamples are plentiful and include the 4-path") {
        const auto reports = find_counterexamples(TheoremId::R_EDGE_MONOTONE, 4);
        CHECK_FALSE(reports.empty());
        bool found_p4 = false;
        for (const AuditReport& r : reports) {
            CHECK_FALSE(r.records[0].holds);
            if (r.graph_id == "Ch") {
                found_p4 = true;
                CHECK_THAT(r.records[0].value, WithinAbs(4 - 2 * kSqrt5, 1e-12));
            }
            CHECK(r.graph_id != "A_");  // flagged degenerate, not a strict failure
        }
        CHECK(found_p4);
    }
    SECTION("deterministic across runs") {
        const auto a = find_counterexamples(TheoremId::T_SELFCOMP_SUM, 3);
        const auto b = find_counterexamples(TheoremId::T_SELFCOMP_SUM, 3);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].graph_id == b[i].graph_id);
    }
}

TEST_CASE("union bounds") {
    const BoundRecord both_regular =
        eval_union_bounds(family(Family::cycle, 3), family(Family::cycle, 4));
    CHECK_THAT(both_regular.value, WithinAbs(28 * kSqrt2, 1e-12));
    CHECK(both_regular.equality_lower);
    CHECK(both_regular.equality_upper);
    CHECK(both_regular.is_regular_input);

    const BoundRecord edges = eval_union_bounds(family(Family::complete, 2), family(Family::complete, 2));
    CHECK_THAT(edges.value, WithinAbs(4 * kSqrt2, 1e-12));
    CHECK(edges.equality_lower);

    const BoundRecord mixed = eval_union_bounds(family(Family::path, 3), Graph(1));
    CHECK_THAT(*mixed.lower, WithinAbs(kSqrt2 + 3, 1e-12));
    CHECK_THAT(mixed.value, WithinAbs(kSqrt2 + 4, 1e-12));
    CHECK_THAT(*mixed.upper, WithinAbs(kSqrt2 + 6, 1e-12));
    CHECK(mixed.holds);
    CHECK_FALSE(mixed.is_regular_input);
}

TEST_CASE("join bounds") {
    const BoundRecord bipartite = eval_join_bounds(Graph(2), Graph(3));
    CHECK_THAT(bipartite.value, WithinAbs(9 * kSqrt2, 1e-12));
    CHECK_THAT(*bipartite.lower, WithinAbs(9 * kSqrt2, 1e-12));
    CHECK_THAT(*bipartite.upper, WithinAbs(9 * kSqrt2, 1e-12));
    CHECK(bipartite.equality_lower);
    CHECK(bipartite.equality_upper);
    CHECK(bipartite.is_regular_input);

    const BoundRecord complete = eval_join_bounds(family(Family::complete, 2), family(Family::complete, 2));
    CHECK(complete.value == 0.0);
    CHECK(*complete.lower == 0.0);
    CHECK(*complete.upper == 0.0);

    const BoundRecord mixed = eval_join_bounds(family(Family::path, 3), Graph(1));
    CHECK_THAT(*mixed.lower, WithinAbs(2 * kSqrt2, 1e-12));
    CHECK_THAT(*mixed.upper, WithinAbs(3 * kSqrt2, 1e-12));
    CHECK(mixed.holds);
}

TEST_CASE("cartesian product bounds") {
    const BoundRecord torus = eval_cartesian_bounds(family(Family::cycle, 3), family(Family::cycle, 3));
    CHECK_THAT(torus.value, WithinAbs(72 * kSqrt2, 1e-12));
    CHECK(torus.equality_lower);
    CHECK(torus.equality_upper);
    CHECK(torus.is_regular_input);

    const BoundRecord square = eval_cartesian_bounds(family(Family::complete, 2), family(Family::complete, 2));
    CHECK_THAT(square.value, WithinAbs(4 * kSqrt2, 1e-12));
    CHECK(square.equality_lower);

    const BoundRecord mixed = eval_cartesian_bounds(family(Family::path, 3), family(Family::complete, 2));
    CHECK_THAT(*mixed.lower, WithinAbs(16 * kSqrt2, 1e-12));
    CHECK_THAT(*mixed.upper, WithinAbs(24 * kSqrt2, 1e-12));
    CHECK(mixed.holds);
    CHECK_FALSE(mixed.equality_lower);
    CHECK_FALSE(mixed.equality_upper);
    CHECK_FALSE(mixed.is_regular_input);
}

TEST_CASE("composition bounds") {
    const BoundRecord fence = eval_composition_bounds(family(Family::cycle, 4), family(Family::complete, 2));
    CHECK_THAT(fence.value, WithinAbs(40 * kSqrt2, 1e-12));
    CHECK(fence.equality_lower);
    CHECK(fence.equality_upper);
    CHECK(fence.is_regular_input);

    const BoundRecord k6 = eval_composition_bounds(family(Family::cycle, 3), family(Family::complete, 2));
    CHECK(k6.value == 0.0);
    CHECK(*k6.lower == 0.0);
    CHECK(*k6.upper == 0.0);

    const BoundRecord k4 = eval_composition_bounds(family(Family::complete, 2), family(Family::complete, 2));
    CHECK(k4.value == 0.0);
}

TEST_CASE("dispatch rejects arity mismatches") {
    const Graph k2 = family(Family::complete, 2);
    CHECK_THROWS_AS(evaluate_theorem(TheoremId::T_UNION_BOUNDS, k2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_pair_theorem(TheoremId::T_DEGREE_BOUNDS, k2, k2),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_counterexamples(TheoremId::T_JOIN_BOUNDS, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_pair_counterexamples(TheoremId::T_DEGREE_BOUNDS, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_pair_counterexamples(TheoremId::T_UNION_BOUNDS, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_pair_counterexamples(TheoremId::T_UNION_BOUNDS, 0),
                    std::invalid_argument);
}

TEST_CASE("pair-theorem search finds nothing on up to 3 vertices per side") {
    for (TheoremId id : {TheoremId::T_UNION_BOUNDS, TheoremId::T_JOIN_BOUNDS,
                         TheoremId::T_CARTESIAN_BOUNDS, TheoremId::T_COMPOSITION_BOUNDS})
        CHECK(find_pair_counterexamples(id, 3).empty());
}

TEST_CASE("records are internally consistent across the 4-vertex universe") {
    for (int n = 1; n <= 4; ++n) {
        LabeledGraphEnumerator en(n);
        while (auto g = en.next()) {
            const AuditReport report = audit_graph(*g);
            for (const BoundRecord& r : report.records) {
                if (!r.applicable) {
                    CHECK_FALSE(r.not_applicable_reason.empty());
                    CHECK_FALSE(r.holds);
                    CHECK_FALSE(r.equality_lower);
                    CHECK_FALSE(r.equality_upper);
                    continue;
                }
                bool holds = true;
                if (r.lower) {
                    const double tol = tol_of(r.value, *r.lower);
                    holds = *r.lower <= r.value + tol;
                    CHECK(r.equality_lower == (std::fabs(r.value - *r.lower) <= tol));
                    CHECK_THAT(r.gap_lower, WithinAbs(r.value - *r.lower, 1e-15));
                }
                if (r.upper) {
                    const double tol = tol_of(r.value, *r.upper);
                    holds = holds && r.value <= *r.upper + tol;
                    CHECK(r.equality_upper == (std::fabs(*r.upper - r.value) <= tol));
                    CHECK_THAT(r.gap_upper, WithinAbs(*r.upper - r.value, 1e-15));
                }
                CHECK(r.holds == holds);
                CHECK(r.is_regular_input == degree_stats(*g).is_regular);
            }
        }
    }
}

TEST_CASE("regular graphs are tight everywhere the equality clause claims") {
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphEnumerator en(n);
        while (auto g = en.next()) {
            if (!degree_stats(*g).is_regular) continue;
            CAPTURE(encode_graph6(*g));

            CHECK(eval_degree_bounds(*g).equality_lower);
            CHECK(eval_degree_bounds(*g).equality_upper);
            CHECK(eval_m1bar_bound(*g).equality_upper);
            CHECK(eval_m1bar_corollary(*g).equality_upper);
            CHECK(eval_so_plus_coso(*g).equality_upper);
            CHECK(eval_sobar_complement_pair(*g).equality_upper);
            CHECK(eval_cs_fbar_upper(*g).equality_upper);

            const bool has_edges = g->edge_count() > 0;
            CHECK(eval_ps_fbar_lower(*g).applicable == has_edges);
            if (has_edges) {
                CHECK(eval_ps_fbar_lower(*g).equality_lower);
                CHECK(eval_ps_m1bar_lower(*g).equality_lower);
                CHECK(eval_m2bar_upper(*g).equality_upper);
            }
        }
    }
}

TEST_CASE("union and join decompose exactly, not just within the bounds") {
    std::vector<Graph> universe;
    for (int n = 1; n <= 3; ++n) {
        LabeledGraphEnumerator en(n);
        while (auto g = en.next()) universe.push_back(std::move(*g));
    }
    for (const Graph& g1 : universe)
        for (const Graph& g2 : universe) {
            const auto d1 = oracle::degrees(g1);
            const auto d2 = oracle::degrees(g2);

            double cross = 0;
            for (const int a : d1)
                for (const int b : d2) cross += std::hypot(a, b);
            CHECK_THAT(sombor_coindex(graph_union(g1, g2)),
                       WithinAbs(oracle::so_coindex(g1) + oracle::so_coindex(g2) + cross, 1e-9));

            const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
            double join_sum = 0;
            for (const auto& [u, v] : non_edges(g1)) join_sum += std::hypot(d1[u] + n2, d1[v] + n2);
            for (const auto& [u, v] : non_edges(g2)) join_sum += std::hypot(d2[u] + n1, d2[v] + n1);
            CHECK_THAT(sombor_coindex(graph_join(g1, g2)), WithinAbs(join_sum, 1e-9));
        }
}

TEST_CASE("operation bounds hold on seeded random graphs beyond the exhaustive range") {
    std::mt19937 rng(20240817);
    auto random_graph = [&rng](int n) {
        std::vector<Graph::VertexPair> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u) edges.emplace_back(u, v);
        return Graph(n, edges);
    };
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g1 = random_graph(5 + static_cast<int>(rng() % 3));
        const Graph g2 = random_graph(5 + static_cast<int>(rng() % 3));
        CAPTURE(encode_graph6(g1), encode_graph6(g2));
        CHECK(eval_union_bounds(g1, g2).holds);
        CHECK(eval_join_bounds(g1, g2).holds);
        CHECK(eval_cartesian_bounds(g1, g2).holds);
        CHECK(eval_composition_bounds(g1, g2).holds);
    }
}
