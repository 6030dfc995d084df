#pragma once

// Degree-based topological indices and their coindex twins.  An index sums a
// degree expression over adjacent pairs, the coindex sums the same expression
// over non-adjacent pairs (degrees still taken in the original graph, never
// in the complement).  Integer-valued invariants are accumulated in 64-bit
// integers and only converted to double at the end, so those results are
// exact; the two Sombor sums are genuinely irrational and live in doubles.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "sombor/graph.hpp"

namespace sombor {

/// Every supported invariant of one graph, from a single pair sweep.
struct IndexVector {
    double so = 0;           // sum over edges of sqrt(d(u)^2 + d(v)^2)
    double so_coindex = 0;   // same summand over non-adjacent pairs
    double m1 = 0;           // sum of squared degrees
    double m1_coindex = 0;   // sum of d(u) + d(v) over non-adjacent pairs
    double m2 = 0;           // sum of d(u) d(v) over edges
    double m2_coindex = 0;   // sum of d(u) d(v) over non-adjacent pairs
    double f = 0;            // sum of cubed degrees
    double f_coindex = 0;    // sum of d(u)^2 + d(v)^2 over non-adjacent pairs
};

namespace detail {

inline constexpr double sqrt2 = std::numbers::sqrt2;
inline const double sqrt5 = std::sqrt(5.0);

/// sqrt(a^2 + b^2) for integer degrees, via a table over all degree pairs a
/// graph on 62 vertices can produce.  The exhaustive audits call this tens
/// of millions of times, so the table pays for itself immediately.
inline double degree_norm(int a, int b) {
    static const auto table = [] {
        std::array<double, static_cast<std::size_t>(kMaxVertices) * kMaxVertices> t{};
        for (int x = 0; x < kMaxVertices; ++x)
            for (int y = 0; y < kMaxVertices; ++y)
                t[static_cast<std::size_t>(x) * kMaxVertices + y] =
                    std::sqrt(static_cast<double>(x) * x + static_cast<double>(y) * y);
        return t;
    }();
    return table[static_cast<std::size_t>(a) * kMaxVertices + b];
}

/// Raw pair sums shared by the invariants and by the bound evaluators.
/// The complement-side Sombor sums reuse the identity that a vertex of
/// degree d has degree n-1-d in the complement, so no complement graph is
/// ever materialized.
struct PairSums {
    int n = 0;
    int m = 0;
    int cm = 0;  // non-adjacent pair count
    int min_degree = 0;
    int max_degree = 0;
    std::int64_t m1 = 0;
    std::int64_t f = 0;
    std::int64_t m2 = 0;
    std::int64_t m1_co = 0;
    std::int64_t m2_co = 0;
    std::int64_t f_co = 0;
    double so = 0;
    double so_co = 0;
    double so_comp = 0;     // Sombor index of the complement
    double so_co_comp = 0;  // Sombor coindex of the complement
};

inline PairSums pair_sums(const Graph& g) {
    PairSums s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.cm = g.coedge_count();

    std::array<int, kMaxVertices> deg{};
    s.min_degree = s.n - 1;
    for (int u = 0; u < s.n; ++u) {
        const int d = g.degree(u);
        deg[static_cast<std::size_t>(u)] = d;
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        s.m1 += static_cast<std::int64_t>(d) * d;
        s.f += static_cast<std::int64_t>(d) * d * d;
    }

    for (int u = 0; u < s.n; ++u) {
        const int du = deg[static_cast<std::size_t>(u)];
        const std::uint64_t row = g.neighbor_bits(u);
        for (int v = u + 1; v < s.n; ++v) {
            const int dv = deg[static_cast<std::size_t>(v)];
            if (row >> v & 1u) {
                s.m2 += static_cast<std::int64_t>(du) * dv;
                s.so += degree_norm(du, dv);
                s.so_co_comp += degree_norm(s.n - 1 - du, s.n - 1 - dv);
            } else {
                s.m1_co += du + dv;
                s.m2_co += static_cast<std::int64_t>(du) * dv;
                s.f_co += static_cast<std::int64_t>(du) * du +
                          static_cast<std::int64_t>(dv) * dv;
                s.so_co += degree_norm(du, dv);
                s.so_comp += degree_norm(s.n - 1 - du, s.n - 1 - dv);
            }
        }
    }
    return s;
}

}  // namespace detail

inline double sombor_index(const Graph& g) { return detail::pair_sums(g).so; }
inline double sombor_coindex(const Graph& g) { return detail::pair_sums(g).so_co; }

inline double first_zagreb(const Graph& g) {
    return static_cast<double>(detail::pair_sums(g).m1);
}

inline double first_zagreb_coindex(const Graph& g) {
    return static_cast<double>(detail::pair_sums(g).m1_co);
}

inline double second_zagreb(const Graph& g) {
    return static_cast<double>(detail::pair_sums(g).m2);
}

inline double second_zagreb_coindex(const Graph& g) {
    return static_cast<double>(detail::pair_sums(g).m2_co);
}

inline double forgotten_index(const Graph& g) {
    return static_cast<double>(detail::pair_sums(g).f);
}

inline double forgotten_coindex(const Graph& g) {
    return static_cast<double>(detail::pair_sums(g).f_co);
}

/// Sum of d(u)^p over all vertices.  Isolated vertices make non-positive
/// exponents meaningless (0^0 and division by zero), so that case is
/// rejected rather than patched over.
inline double general_first_zagreb(const Graph& g, double p) {
    double total = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const int d = g.degree(u);
        if (d == 0 && p <= 0)
            throw std::domain_error("general first Zagreb index undefined: vertex " +
                                    std::to_string(u) + " is isolated and exponent " +
                                    std::to_string(p) + " is not positive");
        total += std::pow(static_cast<double>(d), p);
    }
    return total;
}

/// All eight invariants in one sweep over the vertex pairs.
inline IndexVector compute_all(const Graph& g) {
    const detail::PairSums s = detail::pair_sums(g);
    IndexVector v;
    v.so = s.so;
    v.so_coindex = s.so_co;
    v.m1 = static_cast<double>(s.m1);
    v.m1_coindex = static_cast<double>(s.m1_co);
    v.m2 = static_cast<double>(s.m2);
    v.m2_coindex = static_cast<double>(s.m2_co);
    v.f = static_cast<double>(s.f);
    v.f_coindex = static_cast<double>(s.f_co);
    return v;
}

}  // namespace sombor
