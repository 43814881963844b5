#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padom/error.hpp"
#include "padom/vertex_set.hpp"

namespace padom {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Adjacency is one open-neighborhood word per vertex. Every constructor
/// path goes through build_graph(), which enforces symmetry, irreflexivity
/// and deduplication.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const {
        int twice = 0;
        for (auto a : adj_) twice += a.size();
        return twice / 2;
    }
    VertexSet vertices() const { return VertexSet::full(order()); }

    VertexSet open_nbhd(Vertex v) const { return adj_[v]; }
    VertexSet closed_nbhd(Vertex v) const { return adj_[v] | VertexSet::single(v); }
    /// N[S]
    VertexSet closed_nbhd(VertexSet s) const {
        VertexSet out = s;
        for (Vertex v : s) out |= adj_[v];
        return out;
    }
    int degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

    int min_degree() const {
        int d = order() == 0 ? 0 : kMaxVertices;
        for (auto a : adj_) d = std::min(d, a.size());
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (auto a : adj_) d = std::max(d, a.size());
        return d;
    }

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph&) const = default;

    friend Graph build_graph(int n, const std::vector<Edge>& edges);

private:
    std::vector<VertexSet> adj_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
    Graph g;
    g.adj_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
    }
    return g;
}

inline Graph edgeless_graph(int n) { return build_graph(n, {}); }

/// G + uv. Adding an existing edge returns an equal graph.
inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    auto es = g.edges();
    es.emplace_back(u, v);
    return build_graph(g.order(), es);
}

/// Result of deleting vertices: the induced subgraph plus, for every new
/// label, the original label it came from.
struct Deletion {
    Graph graph;
    std::vector<Vertex> original;

    /// New label of an original vertex, or -1 if it was deleted.
    Vertex relabel(Vertex orig) const {
        auto it = std::lower_bound(original.begin(), original.end(), orig);
        return (it != original.end() && *it == orig) ? static_cast<Vertex>(it - original.begin()) : -1;
    }
};

/// G - S. Survivors are relabeled densely in ascending original order.
inline Deletion delete_vertices(const Graph& g, VertexSet s) {
    Deletion d;
    std::vector<Vertex> fresh(g.order(), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        fresh[v] = static_cast<Vertex>(d.original.size());
        d.original.push_back(v);
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (fresh[u] >= 0 && fresh[v] >= 0) es.emplace_back(fresh[u], fresh[v]);
    d.graph = build_graph(static_cast<int>(d.original.size()), es);
    return d;
}

/// Replace edge uv by the path u - w - v with w = n.
inline Graph subdivide_edge(const Graph& g, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw GraphError("cannot subdivide (" + std::to_string(u) + "," + std::to_string(v) +
                         "): not an edge");
    const Vertex w = g.order();
    std::vector<Edge> es;
    for (auto e : g.edges())
        if (e != Edge{std::min(u, v), std::max(u, v)}) es.push_back(e);
    es.emplace_back(u, w);
    es.emplace_back(w, v);
    return build_graph(g.order() + 1, es);
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    VertexSet seen = VertexSet::single(0), frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.open_nbhd(v);
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

inline bool is_complete(const Graph& g) {
    const int n = g.order();
    return g.size() == n * (n - 1) / 2;
}

inline bool is_edgeless(const Graph& g) { return g.size() == 0; }

inline bool is_independent(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (g.open_nbhd(v).intersects(s)) return false;
    return true;
}

inline bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (!(s - VertexSet::single(v)).subset_of(g.open_nbhd(v))) return false;
    return true;
}

inline bool is_vertex_cover(const Graph& g, VertexSet s) {
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) return false;
    return true;
}

struct StructuralFlags {
    bool connected;
    bool complete;
    bool edgeless;
    bool independent;
    bool clique;
    bool vertex_cover;
};

inline StructuralFlags structural_predicates(const Graph& g, VertexSet s) {
    return {is_connected(g),    is_complete(g),   is_edgeless(g),
            is_independent(g, s), is_clique(g, s), is_vertex_cover(g, s)};
}

} // namespace padom
