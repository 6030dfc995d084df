#pragma once

// Finite simple graphs on up to 62 vertices, stored as one 64-bit adjacency
// bitset per vertex.  Everything downstream (invariants, bound audits,
// exhaustive enumeration) works on this representation, so it is kept small,
// immutable and cheap to copy.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

inline constexpr int kMaxVertices = 62;

class Graph {
public:
    using VertexPair = std::pair<int, int>;

    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(checked_order(n)), m_(0), rows_(static_cast<std::size_t>(n_), 0) {}

    /// Graph from an explicit edge list.  Endpoints must be in [0, n),
    /// distinct, and duplicates are rejected so that callers cannot silently
    /// hand over a multigraph.
    Graph(int n, std::span<const VertexPair> edges) : Graph(n) {
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::out_of_range("edge endpoint " + std::to_string(u < 0 || u >= n_ ? u : v) +
                                        " outside [0," + std::to_string(n_) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (rows_[static_cast<std::size_t>(u)] >> v & 1u)
                throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                            std::to_string(v) + "}");
            rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            ++m_;
        }
    }

    Graph(int n, std::initializer_list<VertexPair> edges)
        : Graph(n, std::span<const VertexPair>(edges.begin(), edges.size())) {}

    /// Graph from raw adjacency rows (bit v of rows[u] set iff uv is an
    /// edge).  Rows must be symmetric, loop-free and confined to n bits.
    Graph(int n, std::vector<std::uint64_t> rows) : n_(checked_order(n)), m_(0), rows_(std::move(rows)) {
        if (rows_.size() != static_cast<std::size_t>(n_))
            throw std::invalid_argument("expected " + std::to_string(n_) + " adjacency rows, got " +
                                        std::to_string(rows_.size()));
        const std::uint64_t mask = vertex_mask();
        for (int u = 0; u < n_; ++u) {
            const std::uint64_t row = rows_[static_cast<std::size_t>(u)];
            if (row & ~mask)
                throw std::invalid_argument("adjacency row " + std::to_string(u) +
                                            " has bits beyond vertex " + std::to_string(n_ - 1));
            if (row >> u & 1u)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            m_ += std::popcount(row);
        }
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t bits = rows_[static_cast<std::size_t>(u)]; bits;) {
                const int v = std::countr_zero(bits);
                bits &= bits - 1;
                if (!(rows_[static_cast<std::size_t>(v)] >> u & 1u))
                    throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) +
                                                " and " + std::to_string(v));
            }
        m_ /= 2;
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    /// Non-adjacent unordered pairs: C(n,2) - m.
    int coedge_count() const noexcept { return n_ * (n_ - 1) / 2 - m_; }

    bool adjacent(int u, int v) const noexcept { return rows_[static_cast<std::size_t>(u)] >> v & 1u; }

    /// Adjacency row of u as a bitset (bit v set iff uv is an edge).
    std::uint64_t neighbor_bits(int u) const noexcept { return rows_[static_cast<std::size_t>(u)]; }

    int degree(int u) const noexcept { return std::popcount(rows_[static_cast<std::size_t>(u)]); }

    /// All edges {u,v} with u < v, lexicographically sorted.
    std::vector<VertexPair> edges() const {
        std::vector<VertexPair> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t bits = above(u); bits;) {
                const int v = std::countr_zero(bits);
                bits &= bits - 1;
                out.emplace_back(u, v);
            }
        return out;
    }

    /// Bitset of ones on all n vertex positions.
    std::uint64_t vertex_mask() const noexcept {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int checked_order(int n) {
        if (n < 1 || n > kMaxVertices)
            throw std::out_of_range("vertex count " + std::to_string(n) + " outside [1," +
                                    std::to_string(kMaxVertices) + "]");
        return n;
    }

    // Neighbors of u with index greater than u; drives u < v pair loops.
    std::uint64_t above(int u) const noexcept {
        return rows_[static_cast<std::size_t>(u)] & ~((std::uint64_t{2} << u) - 1);
    }

    int n_;
    int m_;
    std::vector<std::uint64_t> rows_;
};

/// Degree summary of a graph, computed in one sweep.
struct DegreeStats {
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    int edge_count = 0;
    int coedge_count = 0;
    bool is_regular = false;
};

inline DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const int n = g.vertex_count();
    s.degrees.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) s.degrees[static_cast<std::size_t>(u)] = g.degree(u);
    const auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
    s.edge_count = g.edge_count();
    s.coedge_count = g.coedge_count();
    s.is_regular = s.min_degree == s.max_degree;
    return s;
}

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    const std::uint64_t mask = g.vertex_mask();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        rows[static_cast<std::size_t>(u)] = ~g.neighbor_bits(u) & mask & ~(std::uint64_t{1} << u);
    return Graph(n, std::move(rows));
}

/// Non-adjacent pairs {u,v} with u < v, lexicographically sorted.
inline std::vector<Graph::VertexPair> non_edges(const Graph& g) {
    std::vector<Graph::VertexPair> out;
    out.reserve(static_cast<std::size_t>(g.coedge_count()));
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

// -- binary operations --------------------------------------------------
//
// Vertex numbering conventions, fixed so results are reproducible:
//   union / join:  vertices of g1 keep their labels, g2 is shifted by n1.
//   cartesian / composition:  pair (u,v) with u in g1, v in g2 maps to
//   u * n2 + v (row-major in the second factor).

inline Graph graph_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 + n2 > kMaxVertices)
        throw std::invalid_argument("union order " + std::to_string(n1 + n2) + " exceeds " +
                                    std::to_string(kMaxVertices));
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n1 + n2), 0);
    for (int u = 0; u < n1; ++u) rows[static_cast<std::size_t>(u)] = g1.neighbor_bits(u);
    for (int u = 0; u < n2; ++u) rows[static_cast<std::size_t>(n1 + u)] = g2.neighbor_bits(u) << n1;
    return Graph(n1 + n2, std::move(rows));
}

inline Graph graph_join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    Graph base = graph_union(g1, g2);
    const int n = base.vertex_count();
    const std::uint64_t left = (std::uint64_t{1} << n1) - 1;
    const std::uint64_t right = base.vertex_mask() & ~left;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        rows[static_cast<std::size_t>(u)] = base.neighbor_bits(u) | (u < n1 ? right : left);
    return Graph(n, std::move(rows));
}

inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 * n2 > kMaxVertices)
        throw std::invalid_argument("product order " + std::to_string(n1 * n2) + " exceeds " +
                                    std::to_string(kMaxVertices));
    const int n = n1 * n2;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    auto id = [n2](int u, int v) { return u * n2 + v; };
    // (u1,v1) ~ (u2,v2)  iff  u1 = u2 and v1 ~ v2,  or  v1 = v2 and u1 ~ u2.
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) {
            std::uint64_t& row = rows[static_cast<std::size_t>(id(u, v))];
            for (std::uint64_t bits = g2.neighbor_bits(v); bits;) {
                const int w = std::countr_zero(bits);
                bits &= bits - 1;
                row |= std::uint64_t{1} << id(u, w);
            }
            for (std::uint64_t bits = g1.neighbor_bits(u); bits;) {
                const int w = std::countr_zero(bits);
                bits &= bits - 1;
                row |= std::uint64_t{1} << id(w, v);
            }
        }
    return Graph(n, std::move(rows));
}

/// Lexicographic (composition) product g1[g2]:
/// (u1,v1) ~ (u2,v2)  iff  u1 ~ u2,  or  u1 = u2 and v1 ~ v2.
inline Graph composition(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 * n2 > kMaxVertices)
        throw std::invalid_argument("product order " + std::to_string(n1 * n2) + " exceeds " +
                                    std::to_string(kMaxVertices));
    const int n = n1 * n2;
    const std::uint64_t block = (n2 == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n2) - 1);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) {
            std::uint64_t row = g2.neighbor_bits(v) << (u * n2);
            for (std::uint64_t bits = g1.neighbor_bits(u); bits;) {
                const int w = std::countr_zero(bits);
                bits &= bits - 1;
                row |= block << (w * n2);
            }
            rows[static_cast<std::size_t>(u * n2 + v)] = row;
        }
    return Graph(n, std::move(rows));
}

// -- named families ------------------------------------------------------

enum class Family {
    empty,
    complete,
    path,
    cycle,
    star,
    complete_bipartite,
    nanotorus,
    closed_fence,
};

/// A family plus its parameters.  One-parameter families use p1 and ignore
/// p2; complete_bipartite and nanotorus are (p1, p2).
struct FamilySpec {
    Family family = Family::empty;
    int p1 = 0;
    int p2 = 0;
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::empty: return "empty";
        case Family::complete: return "complete";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::nanotorus: return "nanotorus";
        case Family::closed_fence: return "closed_fence";
    }
    throw std::invalid_argument("unknown family");
}

inline std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::empty, Family::complete, Family::path, Family::cycle, Family::star,
                     Family::complete_bipartite, Family::nanotorus, Family::closed_fence})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

inline bool family_is_two_parameter(Family f) {
    return f == Family::complete_bipartite || f == Family::nanotorus;
}

inline Graph generate_family(const FamilySpec& spec) {
    const int p = spec.p1, q = spec.p2;
    auto require = [&](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument(std::string(what) + " (got " + family_name(spec.family) +
                                        " with p1=" + std::to_string(p) + ", p2=" + std::to_string(q) + ")");
    };
    switch (spec.family) {
        case Family::empty:
            require(p >= 1, "empty graph needs n >= 1");
            return Graph(p);
        case Family::complete: {
            require(p >= 1 && p <= kMaxVertices, "complete graph needs 1 <= n <= 62");
            std::vector<Graph::VertexPair> edges;
            for (int u = 0; u < p; ++u)
                for (int v = u + 1; v < p; ++v) edges.emplace_back(u, v);
            return Graph(p, edges);
        }
        case Family::path: {
            require(p >= 1 && p <= kMaxVertices, "path needs 1 <= n <= 62");
            std::vector<Graph::VertexPair> edges;
            for (int u = 0; u + 1 < p; ++u) edges.emplace_back(u, u + 1);
            return Graph(p, edges);
        }
        case Family::cycle: {
            require(p >= 3 && p <= kMaxVertices, "cycle needs 3 <= n <= 62");
            std::vector<Graph::VertexPair> edges;
            for (int u = 0; u + 1 < p; ++u) edges.emplace_back(u, u + 1);
            edges.emplace_back(0, p - 1);
            return Graph(p, edges);
        }
        case Family::star: {
            require(p >= 2 && p <= kMaxVertices, "star needs 2 <= n <= 62");
            std::vector<Graph::VertexPair> edges;
            for (int v = 1; v < p; ++v) edges.emplace_back(0, v);
            return Graph(p, edges);
        }
        case Family::complete_bipartite: {
            require(p >= 1 && q >= 1 && p + q <= kMaxVertices,
                    "complete bipartite needs p, q >= 1 and p + q <= 62");
            std::vector<Graph::VertexPair> edges;
            for (int u = 0; u < p; ++u)
                for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
            return Graph(p + q, edges);
        }
        case Family::nanotorus:
            require(p >= 3 && q >= 3 && p * q <= kMaxVertices,
                    "nanotorus needs p, q >= 3 and p * q <= 62");
            return cartesian_product(generate_family({Family::cycle, p, 0}),
                                     generate_family({Family::cycle, q, 0}));
        case Family::closed_fence:
            require(p >= 3 && 2 * p <= kMaxVertices, "closed fence needs 3 <= n <= 31");
            return composition(generate_family({Family::cycle, p, 0}),
                               generate_family({Family::complete, 2, 0}));
    }
    throw std::invalid_argument("unknown family");
}

// -- exhaustive labeled enumeration ---------------------------------------

/// Walks every labeled simple graph on n vertices exactly once by counting
/// through all 2^C(n,2) edge subsets.  Counter bit k (least significant
/// first) switches the k-th vertex pair in lexicographic order, so the
/// sequence is deterministic and a [first, last) counter range can be
/// handed to a worker as an independent slice.
class LabeledGraphEnumerator {
public:
    static constexpr int kMaxEnumerationVertices = 7;

    explicit LabeledGraphEnumerator(int n) : LabeledGraphEnumerator(n, 0, universe_size(n)) {}

    LabeledGraphEnumerator(int n, std::uint64_t first, std::uint64_t last)
        : n_(n), next_(first), last_(last) {
        if (n < 1 || n > kMaxEnumerationVertices)
            throw std::invalid_argument("enumeration capped at " +
                                        std::to_string(kMaxEnumerationVertices) +
                                        " vertices, requested " + std::to_string(n));
        if (first > last || last > universe_size(n))
            throw std::out_of_range("enumeration range [" + std::to_string(first) + "," +
                                    std::to_string(last) + ") outside universe of size " +
                                    std::to_string(universe_size(n)));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    }

    /// 2^C(n,2), the number of labeled graphs on n vertices.
    static std::uint64_t universe_size(int n) {
        if (n < 1 || n > kMaxEnumerationVertices)
            throw std::invalid_argument("enumeration capped at " +
                                        std::to_string(kMaxEnumerationVertices) +
                                        " vertices, requested " + std::to_string(n));
        return std::uint64_t{1} << (n * (n - 1) / 2);
    }

    std::uint64_t remaining() const noexcept { return last_ - next_; }

    std::optional<Graph> next() {
        if (next_ == last_) return std::nullopt;
        const std::uint64_t code = next_++;
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
        for (std::uint64_t bits = code; bits;) {
            const int k = std::countr_zero(bits);
            bits &= bits - 1;
            const auto [u, v] = pairs_[static_cast<std::size_t>(k)];
            rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        return Graph(n_, std::move(rows));
    }

private:
    int n_;
    std::uint64_t next_;
    std::uint64_t last_;
    std::vector<Graph::VertexPair> pairs_;
};

}  // namespace sombor
