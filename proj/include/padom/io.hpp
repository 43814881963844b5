#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "padom/error.hpp"
#include "padom/graph.hpp"

namespace padom {

// graph6: N(n) followed by the upper triangle of the adjacency matrix,
// column by column ((0,1), (0,2), (1,2), (0,3), ...), packed six bits per
// byte, most significant bit first, each byte offset by 63.

inline std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
    }
    int acc = 0, nbits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(63 + acc);
                acc = nbits = 0;
            }
        }
    }
    if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (text.substr(0, header.size()) == header) pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    for (std::size_t i = pos; i < text.size(); ++i)
        if (text[i] < 63 || text[i] > 126)
            throw ParseError("graph6 character out of range 63..126", i);
    if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

    long n = 0;
    if (text[pos] != '~') {
        n = text[pos++] - 63;
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        throw ParseError("graph6 orders above 258047 are not supported", pos);
    } else {
        if (pos + 4 > text.size()) throw ParseError("truncated graph6 order field", pos);
        for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[pos + k] - 63);
        if (n <= 62) throw ParseError("non-canonical graph6 order field", pos);
        pos += 4;
    }
    if (n > kMaxVertices)
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices), 0);

    const long bits = n * (n - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expected)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(expected) + " for n=" + std::to_string(n),
                         text.size() < pos + expected ? text.size() : pos + expected);

    std::vector<Edge> es;
    long k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
        }
    }
    return build_graph(static_cast<int>(n), es);
}

/// "n m" header, then one "u v" line per edge; '#' starts a comment.
inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

namespace detail {

/// Splits off the integers on one line; stops at '#'.
inline std::vector<long> line_integers(std::string_view line, std::size_t line_offset) {
    std::vector<long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
            ++i;
            continue;
        }
        long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || ptr == line.data() + i) throw ParseError("expected integer", line_offset + i);
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

inline std::vector<std::pair<std::string_view, std::size_t>> split_lines(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        out.emplace_back(text.substr(start, end - start), start);
        start = end + 1;
    }
    return out;
}

inline bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

} // namespace detail

inline Graph parse_edge_list(std::string_view text) {
    long n = -1, m = -1;
    std::vector<Edge> es;
    for (auto [line, offset] : detail::split_lines(text)) {
        auto ints = detail::line_integers(line, offset);
        if (ints.empty()) continue;
        if (ints.size() != 2) throw ParseError("expected two integers per line", offset);
        if (n < 0) {
            n = ints[0];
            m = ints[1];
            if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", offset);
            if (m < 0) throw ParseError("negative edge count", offset);
            continue;
        }
        if (ints[0] < 0 || ints[0] >= n || ints[1] < 0 || ints[1] >= n)
            throw ParseError("edge endpoint out of range", offset);
        if (ints[0] == ints[1]) throw ParseError("loop edge", offset);
        es.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
    }
    if (n < 0) throw ParseError("missing 'n m' header", 0);
    if (static_cast<long>(es.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(es.size()),
                         text.size());
    return build_graph(static_cast<int>(n), es);
}

enum class GraphFormat { automatic, graph6, edge_list };

/// Single graph from text. Automatic detection treats input whose first
/// meaningful line holds whitespace-separated integers as an edge list.
inline Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::automatic) {
    if (format == GraphFormat::automatic) {
        format = GraphFormat::graph6;
        for (auto [line, offset] : detail::split_lines(text)) {
            if (detail::blank_or_comment(line)) continue;
            if (line.find_first_of(" \t") != std::string_view::npos) format = GraphFormat::edge_list;
            break;
        }
    }
    if (format == GraphFormat::edge_list) return parse_edge_list(text);
    for (auto [line, offset] : detail::split_lines(text)) {
        if (detail::blank_or_comment(line)) continue;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        try {
            return parse_graph6(line);
        } catch (const ParseError& e) {
            throw ParseError("graph6: " + e.message(), offset + e.offset());
        }
    }
    throw ParseError("no graph found", 0);
}

} // namespace padom
