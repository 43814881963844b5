#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padom/domination.hpp"
#include "padom/error.hpp"
#include "padom/graph.hpp"
#include "padom/path_addition.hpp"

namespace padom {

/// Predicted γ(G_{u,v,k}) for one k, with the label of the rule that decided it.
/// `gamma` is empty when the characterizations do not pin the value.
struct StepPrediction {
    int k = 0;
    std::optional<int> gamma;
    std::string clause;
};

struct PairPrediction {
    Vertex u = 0;
    Vertex v = 0;
    bool adjacent = false;
    std::vector<StepPrediction> steps; ///< k = 1, 2, ... up to the first increase
    PaValue pa = PaValue::infinite();
    std::string clause; ///< rule that fired at k = pa
};

/// Aggregates derived from the closed-form characterizations, with the
/// characterizations that decided each value.
struct AggregateCharacterization {
    PaAggregates values;
    std::vector<std::string> fired;
};

enum class Region { R0, R1, R2, R3, R4, R5, NotInA };

inline const char* region_name(Region r) {
    switch (r) {
    case Region::R0: return "R0";
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    case Region::R4: return "R4";
    case Region::R5: return "R5";
    case Region::NotInA: return "NotInA";
    }
    return "?";
}

/// Membership in the epa = 3 classes:
///   A  : epa(G) = 3
///   A1 : V⁻(G) is a vertex cover
///   A2 : every edge lies inside some γ-set
///   A3 : every vertex is γ-critical
struct RegionClass {
    bool in_A = false;
    bool in_A1 = false;
    bool in_A2 = false;
    bool in_A3 = false;
    Region region = Region::NotInA;
};

/// Cells of the class diagram:
///   R0 = A - (A1 ∪ A2)    R1 = A1 - (A2 ∪ A3)    R2 = A3 - A2
///   R3 = A3 ∩ A2          R4 = (A1 ∩ A2) - A3    R5 = A2 - A1
inline Region region_of(bool in_A, bool in_A1, bool in_A2, bool in_A3) {
    if (!in_A) return Region::NotInA;
    if (in_A3) return in_A2 ? Region::R3 : Region::R2;
    if (in_A1) return in_A2 ? Region::R4 : Region::R1;
    return in_A2 ? Region::R5 : Region::R0;
}

/// Predicts path-addition outcomes for one graph from domination data of
/// G and of its vertex-deleted subgraphs only. It never runs the solver on
/// a path-added graph.
///
/// Results of the underlying queries are memoized; an instance is not safe
/// for concurrent use.
class TheoremOracle {
public:
    explicit TheoremOracle(Graph g) : g_(std::move(g)) {}

    const Graph& graph() const { return g_; }

    const DominationReport& report() const {
        if (!report_) report_ = classify_vertices(g_);
        return *report_;
    }
    int gamma() const { return report().gamma; }
    bool good(Vertex v) const { return report().good.contains(v); }
    bool bad(Vertex v) const { return report().bad.contains(v); }
    bool in_v_minus(Vertex v) const { return report().v_minus.contains(v); }

    /// γ(G - {u, v})
    int gamma_without_pair(Vertex u, Vertex v) const {
        return cached(pair_gamma_, key(u, v), [&] { return padom::gamma(delete_vertices(g_, VertexSet{u, v}).graph); });
    }

    /// γ(G - v)
    int gamma_without(Vertex v) const {
        return cached(single_gamma_, {v, v}, [&] { return padom::gamma(delete_vertices(g_, VertexSet::single(v)).graph); });
    }

    /// x ∈ V⁻(G - removed)
    bool critical_after_deleting(Vertex x, Vertex removed) const {
        return gamma_without_pair(x, removed) < gamma_without(removed);
    }

    /// x is γ-good in G - removed
    bool good_after_deleting(Vertex x, Vertex removed) const {
        return cached(good_minus_, {x, removed}, [&] {
            const auto d = delete_vertices(g_, VertexSet::single(removed));
            auto c = gamma_constrained(d.graph, {VertexSet::single(d.relabel(x)), {}});
            return c && *c == gamma_without(removed) ? 1 : 0;
        }) != 0;
    }

    /// Some γ-set of G contains both u and v.
    bool common_gamma_set(Vertex u, Vertex v) const {
        return cached(common_, key(u, v), [&] {
            auto c = gamma_constrained(g_, {VertexSet{u, v}, {}});
            return c && *c == gamma() ? 1 : 0;
        }) != 0;
    }

    StepPrediction predict_adjacent(Vertex u, Vertex v, int k) const {
        check_pair(u, v);
        if (!g_.adjacent(u, v)) throw GraphError("predict_adjacent: vertices are not adjacent");
        const int gm = gamma();
        switch (k) {
        case 1:
            if (good(u) || good(v)) return {1, gm, "adjacent.k1.endpoint-good"};
            return {1, gm + 1, "adjacent.k1.both-bad"};
        case 2:
            if (common_gamma_set(u, v)) return {2, gm, "adjacent.k2.common-gamma-set"};
            if (in_v_minus(u) || in_v_minus(v)) return {2, gm, "adjacent.k2.endpoint-critical"};
            if (bad(u) && bad(v)) return {2, gm + 1, "adjacent.k2.both-bad"};
            return {2, gm + 1, "adjacent.k2.separated-noncritical"};
        case 3:
            return {3, gm + 1, "adjacent.k3.always"};
        default:
            throw GraphError("predict_adjacent: k must be 1, 2 or 3");
        }
    }

    StepPrediction predict_nonadjacent(Vertex u, Vertex v, int k) const {
        check_pair(u, v);
        if (g_.adjacent(u, v)) throw GraphError("predict_nonadjacent: vertices are adjacent");
        const int gm = gamma();
        switch (k) {
        case 1:
            if (gamma_without_pair(u, v) == gm - 2) return {1, gm - 1, "nonadjacent.k1.pair-deletion-drops-two"};
            if (bad(u) && bad(v) && !critical_after_deleting(u, v) && !critical_after_deleting(v, u))
                return {1, gm + 1, "nonadjacent.k1.both-bad-noncritical"};
            return {1, gm, "nonadjacent.k1.otherwise"};
        case 2:
            if (common_gamma_set(u, v)) return {2, gm, "nonadjacent.k2.common-gamma-set"};
            if (in_v_minus(u) || in_v_minus(v)) return {2, gm, "nonadjacent.k2.endpoint-critical"};
            return {2, gm + 1, "nonadjacent.k2.separated-noncritical"};
        case 3:
            if ((in_v_minus(u) && good_after_deleting(v, u)) || (in_v_minus(v) && good_after_deleting(u, v)))
                return {3, gm, "nonadjacent.k3.critical-then-good"};
            return {3, gm + 1, "nonadjacent.k3.otherwise"};
        case 4:
            if (gamma_without_pair(u, v) == gm - 2) return {4, gm, "nonadjacent.k4.pair-deletion-drops-two"};
            if (predict_nonadjacent(u, v, 1).gamma == gm + 1) return {4, gm + 2, "nonadjacent.k4.k1-increased"};
            return {4, gm + 1, "nonadjacent.k4.otherwise"};
        case 5:
            if (predict_nonadjacent(u, v, 4).gamma == gm) return {5, gm + 1, "nonadjacent.k5.after-k4-unchanged"};
            return {5, std::nullopt, "nonadjacent.k5.undetermined"};
        default:
            throw GraphError("predict_nonadjacent: k must be in 1..5");
        }
    }

    /// Dispatches on adjacency. Adjacent pairs are defined for k <= 3 only.
    StepPrediction predict(Vertex u, Vertex v, int k) const {
        return g_.adjacent(u, v) ? predict_adjacent(u, v, k) : predict_nonadjacent(u, v, k);
    }

    PairPrediction predict_pa(Vertex u, Vertex v) const {
        detail::require_pa_domain(g_, u, v);
        PairPrediction p;
        p.u = u;
        p.v = v;
        p.adjacent = g_.adjacent(u, v);
        const int last = p.adjacent ? 3 : 5;
        for (int k = 1; k <= last; ++k) {
            auto step = predict(u, v, k);
            p.steps.push_back(step);
            if (step.gamma && *step.gamma > gamma()) {
                p.pa = PaValue::finite(k);
                p.clause = step.clause;
                return p;
            }
        }
        throw InternalInconsistency("predicted chain for (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") never exceeds γ");
    }

    AggregateCharacterization characterize_aggregates() const {
        if (g_.order() < 2) throw GraphError("path-addition numbers need at least 2 vertices");
        AggregateCharacterization out;
        const auto& r = report();
        const int gm = gamma();
        const auto es = g_.edges();
        std::vector<Edge> non_edges;
        for (Vertex u = 0; u < g_.order(); ++u)
            for (Vertex v = u + 1; v < g_.order(); ++v)
                if (!g_.adjacent(u, v)) non_edges.emplace_back(u, v);

        auto fire = [&](std::string s) { out.fired.push_back(std::move(s)); };
        auto any_non_edge = [&](auto pred) {
            for (auto [u, v] : non_edges)
                if (pred(u, v)) return true;
            return false;
        };

        if (es.empty()) {
            fire("epa=Epa=inf: edgeless");
        } else {
            if (!r.bad.empty() && !is_independent(g_, r.bad)) {
                out.values.epa = PaValue::finite(1);
                fire("epa=1: γ-bad vertices neither empty nor independent");
            } else {
                bool all_unchanged_at_two = true;
                for (auto [u, v] : es)
                    if (!common_gamma_set(u, v) && !in_v_minus(u) && !in_v_minus(v)) all_unchanged_at_two = false;
                if (all_unchanged_at_two) {
                    out.values.epa = PaValue::finite(3);
                    fire("epa=3: every edge lies in a γ-set or meets V⁻");
                } else {
                    out.values.epa = PaValue::finite(2);
                    fire("epa=2: γ-bad vertices empty or independent, some edge neither in a γ-set nor meeting V⁻");
                }
            }
            if (r.strong_equality) {
                out.values.Epa = PaValue::finite(2);
                fire("Epa=2: i ≡ γ");
            } else {
                out.values.Epa = PaValue::finite(3);
                fire("Epa=3: some γ-set is not independent");
            }
        }

        if (non_edges.empty()) {
            fire("epa_bar=Epa_bar=inf: complete");
            return out;
        }

        const auto drops_two = [&](Vertex u, Vertex v) { return gamma_without_pair(u, v) == gm - 2; };
        const auto unchanged_at_three = [&](Vertex u, Vertex v) {
            return (in_v_minus(u) && good_after_deleting(v, u)) || (in_v_minus(v) && good_after_deleting(u, v));
        };

        if (es.empty()) {
            out.values.epa_bar = PaValue::finite(5);
            fire("epa_bar=5: edgeless");
        } else if (any_non_edge([&](Vertex u, Vertex v) {
                       return bad(u) && bad(v) && !critical_after_deleting(u, v) && !critical_after_deleting(v, u);
                   })) {
            out.values.epa_bar = PaValue::finite(1);
            fire("epa_bar=1: nonadjacent γ-bad pair, neither critical after deleting the other");
        } else if (any_non_edge([&](Vertex u, Vertex v) {
                       return !in_v_minus(u) && !in_v_minus(v) && !common_gamma_set(u, v);
                   })) {
            out.values.epa_bar = PaValue::finite(2);
            fire("epa_bar=2: nonadjacent pair outside V⁻ sharing no γ-set");
        } else if (any_non_edge([&](Vertex u, Vertex v) { return !unchanged_at_three(u, v); })) {
            out.values.epa_bar = PaValue::finite(3);
            fire("epa_bar=3: nonadjacent pair with no critical-then-good endpoint");
        } else {
            out.values.epa_bar = PaValue::finite(4);
            fire("epa_bar=4: every nonadjacent pair has a critical-then-good endpoint");
        }

        if (gm == 1) {
            out.values.Epa_bar = PaValue::finite(1);
            fire("Epa_bar=1: γ = 1");
        } else if (all_gamma_sets_cliques(g_)) {
            out.values.Epa_bar = PaValue::finite(2);
            fire("Epa_bar=2: γ >= 2 and every γ-set is a clique");
        } else if (any_non_edge(drops_two)) {
            out.values.Epa_bar = PaValue::finite(5);
            fire("Epa_bar=5: nonadjacent pair with γ(G-{u,v}) = γ-2");
        } else if (any_non_edge(unchanged_at_three)) {
            out.values.Epa_bar = PaValue::finite(4);
            fire("Epa_bar=4: nonadjacent pair with a critical-then-good endpoint");
        } else {
            out.values.Epa_bar = PaValue::finite(3);
            fire("Epa_bar=3: some γ-set is not a clique, no pair survives k=3");
        }
        return out;
    }

    RegionClass classify_regions() const {
        if (g_.size() == 0) throw GraphError("region classes need at least one edge");
        RegionClass rc;
        const auto& r = report();
        rc.in_A = characterize_aggregates().values.epa == PaValue::finite(3);
        rc.in_A1 = is_vertex_cover(g_, r.v_minus);
        rc.in_A2 = true;
        for (auto [u, v] : g_.edges())
            if (!common_gamma_set(u, v)) {
                rc.in_A2 = false;
                break;
            }
        rc.in_A3 = r.critical == g_.vertices();
        rc.region = region_of(rc.in_A, rc.in_A1, rc.in_A2, rc.in_A3);
        return rc;
    }

    /// Membership in the class of graphs with epa_bar = Epa_bar = 3, by the
    /// characterization: noncomplete, every vertex γ-good, V⁻ empty, and every
    /// nonadjacent pair inside a common γ-set.
    bool in_class_U() const {
        if (g_.order() < 2) throw GraphError("path-addition numbers need at least 2 vertices");
        if (is_complete(g_)) return false;
        const auto& r = report();
        if (r.good != g_.vertices() || !r.v_minus.empty()) return false;
        for (Vertex u = 0; u < g_.order(); ++u)
            for (Vertex v = u + 1; v < g_.order(); ++v)
                if (!g_.adjacent(u, v) && !common_gamma_set(u, v)) return false;
        return true;
    }

private:
    using Key = std::pair<Vertex, Vertex>;
    static Key key(Vertex u, Vertex v) { return u < v ? Key{u, v} : Key{v, u}; }

    template <class Fn>
    static int cached(std::map<Key, int>& memo, Key k, Fn&& compute) {
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        const int value = compute();
        memo.emplace(k, value);
        return value;
    }

    void check_pair(Vertex u, Vertex v) const {
        if (u == v) throw GraphError("prediction needs distinct vertices");
        if (u < 0 || v < 0 || u >= g_.order() || v >= g_.order()) throw GraphError("vertex outside the graph");
    }

    Graph g_;
    mutable std::optional<DominationReport> report_;
    mutable std::map<Key, int> pair_gamma_;
    mutable std::map<Key, int> single_gamma_;
    mutable std::map<Key, int> good_minus_;
    mutable std::map<Key, int> common_;
};

inline StepPrediction predict_adjacent(const Graph& g, Vertex u, Vertex v, int k) {
    return TheoremOracle(g).predict_adjacent(u, v, k);
}
inline StepPrediction predict_nonadjacent(const Graph& g, Vertex u, Vertex v, int k) {
    return TheoremOracle(g).predict_nonadjacent(u, v, k);
}
inline PairPrediction predict_pa(const Graph& g, Vertex u, Vertex v) { return TheoremOracle(g).predict_pa(u, v); }
inline AggregateCharacterization characterize_aggregates(const Graph& g) {
    return TheoremOracle(g).characterize_aggregates();
}
inline RegionClass classify_regions(const Graph& g) { return TheoremOracle(g).classify_regions(); }
inline bool in_class_U(const Graph& g) { return TheoremOracle(g).in_class_U(); }

/// Sum inequalities for a connected noncomplete graph with edges:
///   (i)   2 <= epa + Epa_bar <= 8      (ii) 2 <= epa + epa_bar <= 7
///   (iii) 3 <= Epa + Epa_bar <= 8      (iv) 3 <= Epa + epa_bar <= 7
struct SumBounds {
    PaAggregates aggregates;
    bool i = false;
    bool ii = false;
    bool iii = false;
    bool iv = false;
    bool all() const { return i && ii && iii && iv; }
};

inline SumBounds check_sum_bounds(const Graph& g, const PaProfile& profile) {
    if (g.size() == 0) throw GraphError("sum bounds need a graph with edges");
    if (!is_connected(g)) throw GraphError("sum bounds need a connected graph");
    if (is_complete(g)) throw GraphError("sum bounds need a noncomplete graph");
    SumBounds s;
    s.aggregates = profile.aggregates;
    const auto& a = profile.aggregates;
    auto within = [](PaValue x, PaValue y, int lo, int hi) {
        if (x.is_infinite() || y.is_infinite()) return false;
        const int sum = x.value() + y.value();
        return lo <= sum && sum <= hi;
    };
    s.i = within(a.epa, a.Epa_bar, 2, 8);
    s.ii = within(a.epa, a.epa_bar, 2, 7);
    s.iii = within(a.Epa, a.Epa_bar, 3, 8);
    s.iv = within(a.Epa, a.epa_bar, 3, 7);
    return s;
}

inline SumBounds check_sum_bounds(const Graph& g) {
    if (g.size() == 0) throw GraphError("sum bounds need a graph with edges");
    if (!is_connected(g)) throw GraphError("sum bounds need a connected graph");
    if (is_complete(g)) throw GraphError("sum bounds need a noncomplete graph");
    return check_sum_bounds(g, pa_profile(g));
}

} // namespace padom
