#pragma once

// Graph input/output: the graph6 text format (short form, n <= 62) and a
// small edge-list format with an explicit vertex-count header so isolated
// vertices are representable.
//
// graph6 layout: one size byte (n + 63), then the upper triangle of the
// adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
// packed six bits per byte, most significant bit first, each 6-bit group
// offset by 63 into the printable range.  Unused bits in the final byte must
// be zero.  Parsing is strict about every one of those rules so that
// encode/parse is an exact round trip, byte for byte.

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Input rejection with an optional 1-based line number (0 when the source
/// is a single line or not line-oriented); what() carries the full message.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.reserve(1 + static_cast<std::size_t>(n * (n - 1) / 2 + 5) / 6);
    out.push_back(static_cast<char>(63 + n));
    int group = 0, group_bits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = group << 1 | (g.adjacent(u, v) ? 1 : 0);
            if (++group_bits == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                group_bits = 0;
            }
        }
    if (group_bits > 0) out.push_back(static_cast<char>(63 + (group << (6 - group_bits))));
    return out;
}

inline Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("empty graph6 string");
    for (std::size_t i = 0; i < line.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte " + std::to_string(c) + " at position " +
                             std::to_string(i + 1) + " outside printable range 63..126");
    }
    if (line[0] == '~') throw ParseError("graph6 long form (more than 62 vertices) not supported");
    const int n = line[0] - 63;
    if (n == 0) throw ParseError("graph6 header declares 0 vertices");

    const int bit_count = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>(bit_count + 5) / 6;
    if (line.size() - 1 != body_bytes)
        throw ParseError("graph6 body for " + std::to_string(n) + " vertices needs " +
                         std::to_string(body_bytes) + " bytes, got " +
                         std::to_string(line.size() - 1));

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int u = 0, v = 1;  // walks the upper triangle in column order
    int bit = 0;
    for (std::size_t k = 0; k < body_bytes; ++k) {
        const int group = line[1 + k] - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = group >> b & 1;
            if (bit >= bit_count) {
                if (set) throw ParseError("graph6 padding bits must be zero");
                continue;
            }
            if (set) {
                rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            }
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph(n, std::move(rows));
}

namespace detail {

inline std::optional<int> parse_int(std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace detail

/// Edge-list format: an "n <count>" header, then one "u v" pair per line
/// with 0-based endpoints.  '#' starts a comment, blank lines are skipped.
inline Graph parse_edge_list(std::string_view text) {
    std::optional<int> n;
    std::vector<std::uint64_t> rows;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;

        if (!n) {
            if (tokens.size() != 2 || tokens[0] != "n" || !detail::parse_int(tokens[1]))
                throw ParseError("expected header 'n <count>'", lineno);
            const int count = *detail::parse_int(tokens[1]);
            if (count < 1 || count > kMaxVertices)
                throw ParseError("vertex count " + std::to_string(count) + " outside [1," +
                                 std::to_string(kMaxVertices) + "]", lineno);
            n = count;
            rows.assign(static_cast<std::size_t>(count), 0);
            continue;
        }

        if (tokens.size() != 2)
            throw ParseError("expected an edge 'u v', got " + std::to_string(tokens.size()) +
                             " tokens", lineno);
        const auto u = detail::parse_int(tokens[0]), v = detail::parse_int(tokens[1]);
        if (!u || !v) throw ParseError("edge endpoints must be integers", lineno);
        if (*u < 0 || *u >= *n || *v < 0 || *v >= *n)
            throw ParseError("edge endpoint " + std::to_string(*u < 0 || *u >= *n ? *u : *v) +
                             " outside [0," + std::to_string(*n) + ")", lineno);
        if (*u == *v) throw ParseError("self-loop at vertex " + std::to_string(*u), lineno);
        if (rows[static_cast<std::size_t>(*u)] >> *v & 1u)
            throw ParseError("duplicate edge {" + std::to_string(*u) + "," + std::to_string(*v) +
                             "}", lineno);
        rows[static_cast<std::size_t>(*u)] |= std::uint64_t{1} << *v;
        rows[static_cast<std::size_t>(*v)] |= std::uint64_t{1} << *u;
    }
    if (!n) throw ParseError("missing 'n <count>' header");
    return Graph(*n, std::move(rows));
}

enum class SourceForm { graph6, edge_list };

/// A parsed graph together with how it arrived, so reports can echo the
/// original spelling.
struct GraphDocument {
    Graph graph;
    SourceForm source_form;
    std::string source_text;
};

inline GraphDocument parse_document(std::string text, SourceForm form) {
    Graph g = form == SourceForm::graph6 ? parse_graph6(text) : parse_edge_list(text);
    return GraphDocument{std::move(g), form, std::move(text)};
}

}  // namespace sombor
