#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "padom/error.hpp"
#include "padom/graph.hpp"

namespace padom {

inline bool is_dominating(const Graph& g, VertexSet d) { return g.closed_nbhd(d) == g.vertices(); }

/// Dominating sets must contain `include` and avoid `exclude`.
struct ConstrainedQuery {
    VertexSet include;
    VertexSet exclude;
};

/// A minimum (or minimum constrained) dominating set.
struct DominatingSet {
    int size = 0;
    VertexSet members;
};

namespace detail {

// Branch and bound over bit masks. At every node the undominated vertex
// with the fewest admissible dominators is chosen (ties: smallest label)
// and the search branches on which of those dominators enters the set;
// dominators tried in earlier sibling branches are barred from later ones,
// so every set is reached along exactly one path.
class DominationSearch {
public:
    enum class Mode { minimum, enumerate };

    DominationSearch(const Graph& g, bool independent) : all_(g.vertices()), independent_(independent) {
        closed_.reserve(g.order());
        for (Vertex v = 0; v < g.order(); ++v) closed_.push_back(g.closed_nbhd(v));
    }

    /// Smallest dominating D with include ⊆ D ⊆ include ∪ allowed.
    std::optional<DominatingSet> minimum(VertexSet include, VertexSet allowed) {
        mode_ = Mode::minimum;
        allowed = allowed - include;
        VertexSet dominated;
        for (Vertex v : include) dominated |= closed_[v];
        if (independent_)
            for (Vertex v : include) allowed -= closed_[v];

        best_size_ = std::numeric_limits<int>::max();
        if (auto greedy = greedy_cover(include, dominated, allowed)) {
            best_size_ = greedy->size();
            best_set_ = *greedy;
        }
        search(include, dominated, allowed);
        if (best_size_ == std::numeric_limits<int>::max()) return std::nullopt;
        return DominatingSet{best_size_, best_set_};
    }

    /// Every dominating set of exactly `target` vertices drawn from `allowed`,
    /// assuming no smaller one exists.
    std::vector<VertexSet> all_of_size(int target, VertexSet allowed) {
        mode_ = Mode::enumerate;
        found_.clear();
        best_size_ = target + 1;
        search(VertexSet{}, VertexSet{}, allowed);
        return found_;
    }

private:
    std::optional<VertexSet> greedy_cover(VertexSet chosen, VertexSet dominated, VertexSet allowed) const {
        while (dominated != all_) {
            const VertexSet undominated = all_ - dominated;
            int best_gain = 0;
            Vertex pick = -1;
            for (Vertex c : allowed) {
                const int gain = (closed_[c] & undominated).size();
                if (gain > best_gain) best_gain = gain, pick = c;
            }
            if (pick < 0) return std::nullopt;
            chosen.insert(pick);
            dominated |= closed_[pick];
            allowed -= independent_ ? closed_[pick] : VertexSet::single(pick);
        }
        return chosen;
    }

    void search(VertexSet chosen, VertexSet dominated, VertexSet allowed) {
        const int size = chosen.size();
        if (dominated == all_) {
            if (mode_ == Mode::enumerate) {
                found_.push_back(chosen);
            } else if (size < best_size_) {
                best_size_ = size;
                best_set_ = chosen;
            }
            return;
        }
        if (size + 1 >= best_size_) return;

        const VertexSet undominated = all_ - dominated;
        Vertex branch_on = -1;
        int fewest = std::numeric_limits<int>::max();
        for (Vertex w : undominated) {
            const int options = (closed_[w] & allowed).size();
            if (options < fewest) fewest = options, branch_on = w;
        }
        if (fewest == 0) return;

        int max_gain = 1;
        for (Vertex c : allowed) max_gain = std::max(max_gain, (closed_[c] & undominated).size());
        const int lower = (undominated.size() + max_gain - 1) / max_gain;
        if (size + lower >= best_size_) return;

        for (Vertex c : closed_[branch_on] & allowed) {
            VertexSet next_allowed = allowed - VertexSet::single(c);
            if (independent_) next_allowed -= closed_[c];
            VertexSet next_chosen = chosen;
            next_chosen.insert(c);
            search(next_chosen, dominated | closed_[c], next_allowed);
            allowed.erase(c);
        }
    }

    VertexSet all_;
    std::vector<VertexSet> closed_;
    bool independent_;
    Mode mode_ = Mode::minimum;
    int best_size_ = 0;
    VertexSet best_set_;
    std::vector<VertexSet> found_;
};

} // namespace detail

/// γ(G) with a witness γ-set. The empty graph has γ = 0.
inline DominatingSet minimum_dominating_set(const Graph& g) {
    detail::DominationSearch s(g, false);
    return *s.minimum(VertexSet{}, g.vertices());
}

inline int gamma(const Graph& g) { return minimum_dominating_set(g).size; }

/// Minimum size of a dominating set D with include ⊆ D and D ∩ exclude = ∅;
/// nullopt when no such set exists.
inline std::optional<int> gamma_constrained(const Graph& g, const ConstrainedQuery& q) {
    if (q.include.intersects(q.exclude)) throw GraphError("include and exclude sets overlap");
    if (!q.include.subset_of(g.vertices()) || !q.exclude.subset_of(g.vertices()))
        throw GraphError("constraint vertices outside the graph");
    detail::DominationSearch s(g, false);
    auto r = s.minimum(q.include, g.vertices() - q.exclude);
    if (!r) return std::nullopt;
    return r->size;
}

/// i(G) with a witness: a smallest independent dominating set.
inline DominatingSet minimum_independent_dominating_set(const Graph& g) {
    detail::DominationSearch s(g, true);
    return *s.minimum(VertexSet{}, g.vertices());
}

/// All γ-sets, each once, in lexicographic order of their member lists.
inline std::vector<VertexSet> enumerate_gamma_sets(const Graph& g) {
    const int target = gamma(g);
    detail::DominationSearch s(g, false);
    auto sets = s.all_of_size(target, g.vertices());
    std::sort(sets.begin(), sets.end(), lexicographic_less);
    return sets;
}

/// pn[x, M] = N[x] - N[M - {x}].
inline VertexSet private_neighbors(const Graph& g, Vertex x, VertexSet m) {
    if (!m.contains(x)) throw GraphError("vertex " + std::to_string(x) + " is not in " + m.to_string());
    return g.closed_nbhd(x) - g.closed_nbhd(m - VertexSet::single(x));
}

/// The closed neighborhoods of the members of d partition V(G).
inline bool is_efficient_dominating(const Graph& g, VertexSet d) {
    int total = 0;
    for (Vertex v : d) total += g.closed_nbhd(v).size();
    return total == g.order() && is_dominating(g, d);
}

inline bool all_gamma_sets_efficient(const Graph& g) {
    const auto sets = enumerate_gamma_sets(g);
    return std::all_of(sets.begin(), sets.end(), [&](VertexSet d) { return is_efficient_dominating(g, d); });
}

inline bool all_gamma_sets_cliques(const Graph& g) {
    const auto sets = enumerate_gamma_sets(g);
    return std::all_of(sets.begin(), sets.end(), [&](VertexSet d) { return is_clique(g, d); });
}

inline bool all_gamma_sets_independent(const Graph& g) {
    const auto sets = enumerate_gamma_sets(g);
    return std::all_of(sets.begin(), sets.end(), [&](VertexSet d) { return is_independent(g, d); });
}

/// Per-vertex domination data.
struct DominationReport {
    int gamma = 0;
    VertexSet witness;
    VertexSet good;     ///< in some γ-set
    VertexSet bad;      ///< in no γ-set
    VertexSet critical; ///< γ(G - v) = γ(G) - 1
    VertexSet v_minus;  ///< γ(G - v) < γ(G)
    int i_number = 0;
    VertexSet i_witness;
    bool strong_equality = false; ///< every γ-set is independent
};

inline DominationReport classify_vertices(const Graph& g) {
    DominationReport r;
    const auto min = minimum_dominating_set(g);
    r.gamma = min.size;
    r.witness = min.members;

    for (Vertex v = 0; v < g.order(); ++v) {
        if (auto c = gamma_constrained(g, {VertexSet::single(v), {}}); c && *c == r.gamma)
            r.good.insert(v);
        else
            r.bad.insert(v);
        const int without = gamma(delete_vertices(g, VertexSet::single(v)).graph);
        if (without < r.gamma) r.v_minus.insert(v);
        if (without == r.gamma - 1) r.critical.insert(v);
    }

    const auto ind = minimum_independent_dominating_set(g);
    r.i_number = ind.size;
    r.i_witness = ind.members;

    r.strong_equality = true;
    for (auto [u, v] : g.edges()) {
        auto c = gamma_constrained(g, {VertexSet{u, v}, {}});
        if (c && *c == r.gamma) {
            r.strong_equality = false;
            break;
        }
    }
    return r;
}

} // namespace padom
