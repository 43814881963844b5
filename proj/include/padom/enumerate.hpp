#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "padom/error.hpp"
#include "padom/graph.hpp"

namespace padom {

inline constexpr int kDefaultEnumerationCap = 6;

/// Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
inline std::vector<Edge> vertex_pairs(int n) {
    std::vector<Edge> out;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) out.emplace_back(i, j);
    return out;
}

/// The labeled graph whose edge set is given by `mask` over vertex_pairs(n).
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    const auto pairs = vertex_pairs(n);
    std::vector<Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1u) es.push_back(pairs[k]);
    return build_graph(n, es);
}

/// Calls fn(graph) for each of the 2^(n(n-1)/2) labeled graphs on n vertices,
/// in ascending edge-mask order, optionally skipping disconnected ones.
template <class Fn>
void for_each_labeled_graph(int n, bool connected_only, Fn&& fn, int cap = kDefaultEnumerationCap) {
    if (n < 0) throw GraphError("negative vertex count");
    if (n > cap)
        throw GraphError("exhaustive enumeration of n=" + std::to_string(n) + " exceeds the cap of " +
                         std::to_string(cap));
    const int bits = n * (n - 1) / 2;
    if (bits >= 63) throw GraphError("edge mask does not fit in 64 bits");
    const std::uint64_t count = std::uint64_t{1} << bits;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        fn(g);
    }
}

inline std::vector<Graph> enumerate_labeled_graphs(int n, bool connected_only = false,
                                                   int cap = kDefaultEnumerationCap) {
    std::vector<Graph> out;
    for_each_labeled_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); }, cap);
    return out;
}

/// G(n, p) sample. Each vertex pair, in graph6 order, consumes one 64-bit
/// draw and becomes an edge when the draw falls below p * 2^64, so the
/// result depends only on the engine state and not on library distributions.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
    const double scaled = std::ldexp(p, 64);
    const bool always = p >= 1.0;
    const std::uint64_t threshold = always ? 0 : static_cast<std::uint64_t>(scaled);
    std::vector<Edge> es;
    for (auto e : vertex_pairs(n)) {
        const std::uint64_t draw = rng();
        if (always || draw < threshold) es.push_back(e);
    }
    return build_graph(n, es);
}

} // namespace padom
