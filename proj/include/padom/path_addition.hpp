#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "padom/domination.hpp"
#include "padom/error.hpp"
#include "padom/graph.hpp"

namespace padom {

/// A path-addition number: finite k >= 1, or the conventional infinity
/// used for aggregates over an empty pair class.
class PaValue {
public:
    static constexpr PaValue finite(int k) { return PaValue(k); }
    static constexpr PaValue infinite() { return PaValue(kInf); }

    constexpr bool is_infinite() const { return k_ == kInf; }
    constexpr bool is_finite() const { return k_ != kInf; }
    /// Only meaningful when finite.
    constexpr int value() const { return k_; }

    constexpr auto operator<=>(const PaValue&) const = default;

    /// "3" or "inf"
    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(k_); }

private:
    static constexpr int kInf = 1 << 30;
    constexpr explicit PaValue(int k) : k_(k) {}
    int k_;
};

/// The scan for pa stops here; theory guarantees a crossing by k = 5.
inline constexpr int kPaScanCap = 6;

/// G_{u,v,k}: k new vertices n..n+k-1 form a path from u to v.
/// k = 0 adds the edge uv (no-op if present).
inline Graph path_addition(const Graph& g, Vertex u, Vertex v, int k) {
    const int n = g.order();
    if (u == v) throw GraphError("path addition needs distinct endpoints");
    if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("path addition endpoint outside the graph");
    if (k < 0) throw GraphError("path length must be nonnegative");
    auto es = g.edges();
    if (k == 0) {
        es.emplace_back(u, v);
        return build_graph(n, es);
    }
    es.emplace_back(u, n);
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(n + i, n + i + 1);
    es.emplace_back(n + k - 1, v);
    return build_graph(n + k, es);
}

inline int gamma_after_addition(const Graph& g, Vertex u, Vertex v, int k) { return gamma(path_addition(g, u, v, k)); }

namespace detail {

inline PaValue pa_scan(const Graph& g, int base_gamma, Vertex u, Vertex v) {
    for (int k = 1; k <= kPaScanCap; ++k)
        if (gamma_after_addition(g, u, v, k) > base_gamma) return PaValue::finite(k);
    throw InternalInconsistency("pa(" + std::to_string(u) + "," + std::to_string(v) +
                                ") did not increase γ within k <= " + std::to_string(kPaScanCap));
}

inline void require_pa_domain(const Graph& g, Vertex u, Vertex v) {
    if (g.order() < 2) throw GraphError("path-addition numbers need at least 2 vertices");
    if (u == v) throw GraphError("path-addition numbers need distinct vertices");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw GraphError("vertex outside the graph");
}

} // namespace detail

/// pa(u,v): least k >= 1 with γ(G_{u,v,k}) > γ(G), by direct computation.
inline PaValue pa_direct(const Graph& g, Vertex u, Vertex v) {
    detail::require_pa_domain(g, u, v);
    return detail::pa_scan(g, gamma(g), u, v);
}

struct PairPa {
    Vertex u;
    Vertex v;
    bool adjacent;
    PaValue pa;
};

struct PaAggregates {
    PaValue epa = PaValue::infinite();      ///< min over edges
    PaValue Epa = PaValue::infinite();      ///< max over edges
    PaValue epa_bar = PaValue::infinite();  ///< min over non-edges
    PaValue Epa_bar = PaValue::infinite();  ///< max over non-edges

    bool operator==(const PaAggregates&) const = default;
};

struct PaProfile {
    int gamma = 0;
    std::vector<PairPa> pairs; ///< all u < v, lexicographic
    PaAggregates aggregates;
};

inline PaProfile pa_profile(const Graph& g) {
    if (g.order() < 2) throw GraphError("path-addition numbers need at least 2 vertices");
    PaProfile p;
    p.gamma = gamma(g);
    std::optional<PaValue> emin, emax, nmin, nmax;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            const PaValue pa = detail::pa_scan(g, p.gamma, u, v);
            const bool adj = g.adjacent(u, v);
            p.pairs.push_back({u, v, adj, pa});
            auto& lo = adj ? emin : nmin;
            auto& hi = adj ? emax : nmax;
            if (!lo || pa < *lo) lo = pa;
            if (!hi || pa > *hi) hi = pa;
        }
    }
    // absent pair classes keep the infinite convention
    if (emin) p.aggregates.epa = *emin, p.aggregates.Epa = *emax;
    if (nmin) p.aggregates.epa_bar = *nmin, p.aggregates.Epa_bar = *nmax;
    return p;
}

} // namespace padom
