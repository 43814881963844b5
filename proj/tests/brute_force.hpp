#pragma once

// Reference implementations used only as test oracles. They share no code
// with the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "padom/graph.hpp"

namespace padom::brute {

inline bool dominates(const Graph& g, std::uint64_t mask) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if ((mask >> v) & 1u) continue;
        bool hit = false;
        for (Vertex w = 0; w < g.order() && !hit; ++w) hit = ((mask >> w) & 1u) && g.adjacent(v, w);
        if (!hit) return false;
    }
    return true;
}

/// Smallest dominating subset size, by increasing subset size.
inline int gamma(const Graph& g) {
    const int n = g.order();
    for (int size = 0; size <= n; ++size)
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
            if (std::popcount(m) == size && dominates(g, m)) return size;
    return n;
}

inline std::optional<int> gamma_constrained(const Graph& g, std::uint64_t include, std::uint64_t exclude) {
    std::optional<int> best;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
        if ((m & include) == include && (m & exclude) == 0 && dominates(g, m))
            if (!best || std::popcount(m) < *best) best = std::popcount(m);
    return best;
}

inline std::vector<std::uint64_t> gamma_sets(const Graph& g) {
    const int gm = brute::gamma(g);
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
        if (std::popcount(m) == gm && dominates(g, m)) out.push_back(m);
    return out;
}

inline int independent_domination(const Graph& g) {
    int best = g.order();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        bool independent = true;
        for (Vertex a = 0; a < g.order() && independent; ++a)
            for (Vertex b = a + 1; b < g.order() && independent; ++b)
                if (((m >> a) & 1u) && ((m >> b) & 1u) && g.adjacent(a, b)) independent = false;
        if (independent && dominates(g, m)) best = std::min(best, std::popcount(m));
    }
    return best;
}

/// Depth-first reachability from vertex 0.
inline bool connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y = 0; y < g.order(); ++y)
            if (g.adjacent(x, y) && !seen[y]) seen[y] = true, stack.push_back(y);
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Tries every vertex permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex x = 0; x < a.order() && ok; ++x)
            for (Vertex y = x + 1; y < a.order() && ok; ++y) ok = a.adjacent(x, y) == b.adjacent(perm[x], perm[y]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace padom::brute
