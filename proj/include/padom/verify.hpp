#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "padom/domination.hpp"
#include "padom/enumerate.hpp"
#include "padom/families.hpp"
#include "padom/graph.hpp"
#include "padom/io.hpp"
#include "padom/oracle.hpp"
#include "padom/path_addition.hpp"

namespace padom::verify {

inline constexpr const char* kSchema = "padom.verification/1";
inline constexpr const char* kPrng = "std::mt19937_64";
inline constexpr const char* kWorkersEnv = "PADOM_WORKERS";

enum class CorpusMode { exhaustive, random, file, family };

inline const char* mode_name(CorpusMode m) {
    switch (m) {
    case CorpusMode::exhaustive: return "exhaustive";
    case CorpusMode::random: return "random";
    case CorpusMode::file: return "file";
    case CorpusMode::family: return "family";
    }
    return "?";
}

inline CorpusMode mode_from_name(const std::string& s) {
    for (auto m : {CorpusMode::exhaustive, CorpusMode::random, CorpusMode::file, CorpusMode::family})
        if (s == mode_name(m)) return m;
    throw GraphError("unknown corpus mode '" + s + "'");
}

/// Which graphs a verification run visits.
///
/// Random corpora draw, per graph, the order uniformly from [n_min, n_max]
/// (one engine draw, skipped when the range is a single value) and then the
/// edges by random_graph(); everything is a function of (n range, p, count, seed).
struct CorpusSpec {
    CorpusMode mode = CorpusMode::exhaustive;
    int n_min = 1;
    int n_max = 5;
    bool connected_only = false;
    int cap = kDefaultEnumerationCap;

    int count = 100;
    double p = 0.5;
    std::uint64_t seed = 42;

    std::string path;
    GraphFormat format = GraphFormat::automatic;

    std::vector<std::string> families;
};

struct CorpusEntry {
    std::string label;
    std::optional<Graph> graph;
    std::string error;
};

namespace detail {

inline std::vector<CorpusEntry> read_corpus_file(const CorpusSpec& spec) {
    std::vector<CorpusEntry> out;
    std::ifstream in(spec.path, std::ios::binary);
    if (!in) {
        out.push_back({spec.path, std::nullopt, "cannot open file"});
        return out;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto lines = padom::detail::split_lines(text);

    GraphFormat format = spec.format;
    if (format == GraphFormat::automatic) {
        format = GraphFormat::graph6;
        for (auto [line, off] : lines) {
            if (padom::detail::blank_or_comment(line)) continue;
            if (line.find_first_of(" \t") != std::string_view::npos) format = GraphFormat::edge_list;
            break;
        }
    }

    std::size_t lineno = 0;
    if (format == GraphFormat::graph6) {
        for (auto [line, off] : lines) {
            ++lineno;
            if (padom::detail::blank_or_comment(line)) continue;
            const std::string label = spec.path + ":" + std::to_string(lineno);
            try {
                out.push_back({label, read_graph(line, GraphFormat::graph6), ""});
            } catch (const std::exception& e) {
                out.push_back({label, std::nullopt, e.what()});
            }
        }
        return out;
    }

    // Edge lists: consecutive "n m" blocks, each followed by its m edge lines.
    std::size_t i = 0;
    while (i < lines.size()) {
        if (padom::detail::blank_or_comment(lines[i].first)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        const std::string label = spec.path + ":" + std::to_string(start + 1);
        std::string block;
        try {
            auto header = padom::detail::line_integers(lines[i].first, lines[i].second);
            if (header.size() != 2 || header[1] < 0) throw ParseError("expected 'n m' header", lines[i].second);
            block += std::string(lines[i].first) + "\n";
            ++i;
            long remaining = header[1];
            while (remaining > 0 && i < lines.size()) {
                if (!padom::detail::blank_or_comment(lines[i].first)) {
                    block += std::string(lines[i].first) + "\n";
                    --remaining;
                }
                ++i;
            }
            out.push_back({label, parse_edge_list(block), ""});
        } catch (const std::exception& e) {
            out.push_back({label, std::nullopt, e.what()});
            if (i == start) ++i;
        }
    }
    return out;
}

} // namespace detail

inline std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
    std::vector<CorpusEntry> out;
    switch (spec.mode) {
    case CorpusMode::exhaustive:
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            std::uint64_t index = 0;
            for_each_labeled_graph(
                n, spec.connected_only,
                [&](const Graph& g) {
                    out.push_back({"n=" + std::to_string(n) + "#" + std::to_string(index++), g, ""});
                },
                spec.cap);
        }
        break;
    case CorpusMode::random: {
        if (spec.n_min < 0 || spec.n_max < spec.n_min || spec.n_max > kMaxVertices)
            throw GraphError("invalid random order range");
        std::mt19937_64 rng(spec.seed);
        for (int i = 0; i < spec.count; ++i) {
            int n = spec.n_min;
            if (spec.n_max > spec.n_min)
                n += static_cast<int>(rng() % static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1));
            Graph g = random_graph(n, spec.p, rng);
            if (spec.connected_only && !is_connected(g)) continue;
            out.push_back({"random#" + std::to_string(i), std::move(g), ""});
        }
        break;
    }
    case CorpusMode::file:
        out = detail::read_corpus_file(spec);
        break;
    case CorpusMode::family:
        for (const auto& f : spec.families) {
            try {
                Graph g = generate_family(f);
                if (spec.connected_only && !is_connected(g)) continue;
                out.push_back({f, std::move(g), ""});
            } catch (const std::exception& e) {
                out.push_back({f, std::nullopt, e.what()});
            }
        }
        break;
    }
    return out;
}

/// A failed check, replayable from its graph6 string.
struct Counterexample {
    std::string suite;
    std::string check;
    std::string corpus_label;
    std::string graph6;
    std::optional<Vertex> u, v;
    std::optional<int> k;
    std::string expected;
    std::string actual;
    std::string clause;
};

struct SuiteResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    double seconds = 0.0;
};

/// Collects assertions for one graph under one suite.
class Checker {
public:
    Checker(std::string suite, std::string label, const Graph& g)
        : suite_(std::move(suite)), label_(std::move(label)), graph6_(emit_graph6(g)) {}

    struct Where {
        std::optional<Vertex> u, v;
        std::optional<int> k;
        std::string clause;
    };

    void expect(bool ok, const std::string& check, const std::string& expected, const std::string& actual,
                Where where = {}) {
        if (ok) {
            ++passed_;
            return;
        }
        ++failed_;
        failures_.push_back(
            {suite_, check, label_, graph6_, where.u, where.v, where.k, expected, actual, std::move(where.clause)});
    }

    void expect_eq(long expected, long actual, const std::string& check, Where where = {}) {
        expect(expected == actual, check, std::to_string(expected), std::to_string(actual), std::move(where));
    }

    void expect_true(bool ok, const std::string& check, Where where = {}) {
        expect(ok, check, "true", ok ? "true" : "false", std::move(where));
    }

    long passed() const { return passed_; }
    long failed() const { return failed_; }
    std::vector<Counterexample>& failures() { return failures_; }

private:
    std::string suite_, label_, graph6_;
    long passed_ = 0, failed_ = 0;
    std::vector<Counterexample> failures_;
};

using SuiteFn = std::function<void(const Graph&, const TheoremOracle&, Checker&)>;

struct Suite {
    std::string name;
    std::string description;
    SuiteFn run;
    bool in_all = true;
};

namespace suites {

using Where = Checker::Where;

inline std::vector<Edge> non_edges(const Graph& g) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

inline void oracle_equivalence(const Graph& g, const TheoremOracle& o, Checker& c) {
    if (g.order() < 2) return;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            const int last = g.adjacent(u, v) ? 3 : 5;
            for (int k = 1; k <= last; ++k) {
                const auto p = o.predict(u, v, k);
                if (!p.gamma) continue;
                c.expect_eq(*p.gamma, gamma_after_addition(g, u, v, k), "predicted γ(G_{u,v,k})",
                            {u, v, k, p.clause});
            }
            const auto predicted = o.predict_pa(u, v);
            const auto direct = pa_direct(g, u, v);
            c.expect(predicted.pa == direct, "predict_pa = pa_direct", direct.to_string(), predicted.pa.to_string(),
                     {u, v, std::nullopt, predicted.clause});
        }
    }
}

inline void theorem_tri(const Graph& g, const TheoremOracle& o, Checker& c) {
    for (auto [u, v] : g.edges())
        c.expect_eq(o.gamma() + 1, gamma_after_addition(g, u, v, 3), "adjacent: γ(G_{u,v,3}) = γ+1", {u, v, 3, ""});
}

inline void theorem_five(const Graph& g, const TheoremOracle& o, Checker& c) {
    for (auto [u, v] : non_edges(g)) {
        for (int k : {5, 6}) {
            const int after = gamma_after_addition(g, u, v, k);
            c.expect(after > o.gamma(), "nonadjacent: γ(G_{u,v,k}) > γ for k >= 5", "> " + std::to_string(o.gamma()),
                     std::to_string(after), {u, v, k, ""});
        }
    }
}

inline std::string agg_string(const PaAggregates& a) {
    return "epa=" + a.epa.to_string() + " Epa=" + a.Epa.to_string() + " epa_bar=" + a.epa_bar.to_string() +
           " Epa_bar=" + a.Epa_bar.to_string();
}

inline void aggregate_bounds(const Graph& g, const TheoremOracle&, Checker& c) {
    if (g.order() < 2) return;
    const auto prof = pa_profile(g);
    const auto& a = prof.aggregates;
    const auto F = PaValue::finite;
    const auto inf = PaValue::infinite();
    const std::string s = agg_string(a);
    for (const auto& p : prof.pairs)
        c.expect(p.pa.is_finite() && p.pa.value() >= 1 && p.pa.value() <= (p.adjacent ? 3 : 5), "pair pa in range",
                 p.adjacent ? "1..3" : "1..5", p.pa.to_string(), {p.u, p.v, std::nullopt, ""});
    if (g.size() > 0) {
        c.expect(F(1) <= a.epa && a.epa <= F(3), "1 <= epa <= 3", "1..3", s);
        c.expect(F(2) <= a.Epa && a.Epa <= F(3), "2 <= Epa <= 3", "2..3", s);
        c.expect(a.epa <= a.Epa, "epa <= Epa", "epa <= Epa", s);
    } else {
        c.expect(a.epa == inf && a.Epa == inf, "edgeless: epa = Epa = inf", "inf", s);
    }
    if (!is_complete(g)) {
        c.expect(F(1) <= a.epa_bar && a.epa_bar <= a.Epa_bar && a.Epa_bar <= F(5), "1 <= epa_bar <= Epa_bar <= 5",
                 "1..5 ordered", s);
    } else {
        c.expect(a.epa_bar == inf && a.Epa_bar == inf, "complete: epa_bar = Epa_bar = inf", "inf", s);
    }
}

inline void characterizations(const Graph& g, const TheoremOracle& o, Checker& c) {
    if (g.order() < 2) return;
    const auto prof = pa_profile(g);
    const auto& a = prof.aggregates;
    const auto chr = o.characterize_aggregates();
    std::string fired;
    for (const auto& f : chr.fired) fired += (fired.empty() ? "" : "; ") + f;
    c.expect(chr.values.epa == a.epa, "characterized epa", a.epa.to_string(), chr.values.epa.to_string(),
             {std::nullopt, std::nullopt, std::nullopt, fired});
    c.expect(chr.values.Epa == a.Epa, "characterized Epa", a.Epa.to_string(), chr.values.Epa.to_string(),
             {std::nullopt, std::nullopt, std::nullopt, fired});
    c.expect(chr.values.epa_bar == a.epa_bar, "characterized epa_bar", a.epa_bar.to_string(),
             chr.values.epa_bar.to_string(), {std::nullopt, std::nullopt, std::nullopt, fired});
    c.expect(chr.values.Epa_bar == a.Epa_bar, "characterized Epa_bar", a.Epa_bar.to_string(),
             chr.values.Epa_bar.to_string(), {std::nullopt, std::nullopt, std::nullopt, fired});

    // Biconditionals evaluated from γ-set enumeration, independent of the oracle's constrained queries.
    const auto sets = enumerate_gamma_sets(g);
    const int gm = prof.gamma;
    const bool all_independent =
        std::all_of(sets.begin(), sets.end(), [&](VertexSet d) { return is_independent(g, d); });
    const bool all_cliques = std::all_of(sets.begin(), sets.end(), [&](VertexSet d) { return is_clique(g, d); });
    VertexSet in_some;
    for (auto d : sets) in_some |= d;
    const VertexSet bad = g.vertices() - in_some;
    const auto F = PaValue::finite;
    const auto iff = [&](bool lhs, bool rhs, const std::string& name) {
        c.expect(lhs == rhs, name, rhs ? "true" : "false", lhs ? "true" : "false");
    };

    if (g.size() > 0) {
        iff(a.Epa == F(2), all_independent, "Epa=2 <=> every γ-set independent");
        iff(a.Epa == F(3), !all_independent, "Epa=3 <=> some γ-set not independent");
        iff(a.epa == F(1), !bad.empty() && !is_independent(g, bad), "epa=1 <=> γ-bad set neither empty nor independent");
    }
    if (!is_complete(g)) {
        bool drop_two = false;
        for (auto [u, v] : non_edges(g))
            if (gamma(delete_vertices(g, VertexSet{u, v}).graph) == gm - 2) drop_two = true;
        iff(a.Epa_bar == F(1), gm == 1, "Epa_bar=1 <=> γ=1");
        iff(a.Epa_bar == F(2), gm >= 2 && all_cliques, "Epa_bar=2 <=> γ>=2 and every γ-set a clique");
        iff(a.Epa_bar == F(5), drop_two, "Epa_bar=5 <=> some nonadjacent pair has γ(G-{u,v}) = γ-2");
        iff(a.epa_bar == F(5), g.size() == 0, "epa_bar=5 <=> edgeless");
    }
    iff(o.in_class_U(), a.epa_bar == F(3) && a.Epa_bar == F(3), "in_class_U <=> epa_bar = Epa_bar = 3");
}

inline void regions(const Graph& g, const TheoremOracle& o, Checker& c) {
    if (g.size() == 0) return;
    const auto rc = o.classify_regions();
    const auto prof = pa_profile(g);
    const bool epa3 = prof.aggregates.epa == PaValue::finite(3);
    c.expect_true(!rc.in_A3 || rc.in_A1, "A3 => A1");
    c.expect_true(!(rc.in_A1 || rc.in_A2) || rc.in_A, "A1 or A2 => A");
    c.expect(rc.in_A == epa3, "in_A <=> profile epa = 3", epa3 ? "true" : "false", rc.in_A ? "true" : "false");
    c.expect_true(!rc.in_A1 || epa3, "V⁻ a vertex cover => epa = 3");
    c.expect_true(!rc.in_A3 || epa3, "vc-graph => epa = 3");
    c.expect_true((rc.region == Region::NotInA) == !rc.in_A, "region tag partitions A");
}

inline void sum_bounds(const Graph& g, const TheoremOracle&, Checker& c) {
    if (g.size() == 0 || !is_connected(g) || is_complete(g)) return;
    const auto s = check_sum_bounds(g);
    const std::string a = agg_string(s.aggregates);
    c.expect(s.i, "2 <= epa + Epa_bar <= 8", "within", a);
    c.expect(s.ii, "2 <= epa + epa_bar <= 7", "within", a);
    c.expect(s.iii, "3 <= Epa + Epa_bar <= 8", "within", a);
    c.expect(s.iv, "3 <= Epa + epa_bar <= 7", "within", a);
}

inline void lemmas(const Graph& g, const TheoremOracle& o, Checker& c) {
    const auto& r = o.report();
    const int gm = r.gamma;

    c.expect_true(is_dominating(g, r.witness) && r.witness.size() == gm, "witness is a γ-set");
    c.expect_true((r.good & r.bad).empty() && (r.good | r.bad) == g.vertices(), "good xor bad");
    c.expect_true(r.critical == r.v_minus, "critical <=> V⁻");
    c.expect_true(r.i_number >= gm, "i >= γ");
    c.expect_true(!r.strong_equality || r.i_number == gm, "i ≡ γ => i = γ");
    c.expect_true(is_independent(g, r.i_witness) && is_dominating(g, r.i_witness), "i-witness independent dominating");

    for (auto [u, v] : g.edges()) {
        const int sub = gamma(subdivide_edge(g, u, v));
        c.expect(sub >= gm, "subdivision does not decrease γ", ">= " + std::to_string(gm), std::to_string(sub),
                 {u, v, std::nullopt, ""});
    }
    for (auto [u, v] : non_edges(g)) {
        const int plus = gamma(add_edge(g, u, v));
        c.expect(gm - 1 <= plus && plus <= gm, "γ-1 <= γ(G+e) <= γ", std::to_string(gm - 1) + ".." + std::to_string(gm),
                 std::to_string(plus), {u, v, 0, ""});
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (r.bad.contains(v)) c.expect_eq(gm, o.gamma_without(v), "γ-bad v: γ(G-v) = γ", {v, std::nullopt, std::nullopt, ""});
        if (r.critical.contains(v)) {
            const auto d = delete_vertices(g, VertexSet::single(v));
            const auto rd = classify_vertices(d.graph);
            for (Vertex w : g.open_nbhd(v))
                c.expect_true(rd.bad.contains(d.relabel(w)), "critical v: neighbors are γ-bad in G-v",
                              {v, w, std::nullopt, ""});
        }
    }

    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            std::vector<int> chain;
            for (int k = 0; k <= 6; ++k) chain.push_back(gamma_after_addition(g, u, v, k));
            if (g.adjacent(u, v)) {
                c.expect_eq(gm, chain[0], "adjacent: γ(G_{u,v,0}) = γ", {u, v, 0, ""});
            } else {
                c.expect(gm - 1 <= chain[0] && chain[0] <= gm, "nonadjacent: γ-1 <= γ(G_{u,v,0}) <= γ",
                         std::to_string(gm - 1) + ".." + std::to_string(gm), std::to_string(chain[0]), {u, v, 0, ""});
            }
            for (int k = 0; k < 6; ++k)
                c.expect(chain[k] <= chain[k + 1], "γ(G_{u,v,k}) nondecreasing in k", "<= next",
                         std::to_string(chain[k]) + " then " + std::to_string(chain[k + 1]), {u, v, k, ""});
        }
    }
}

inline void x1_critical(const Graph& g, const TheoremOracle& o, Checker& c) {
    for (auto [u, v] : non_edges(g)) {
        const auto p = o.predict_nonadjacent(u, v, 1);
        if (p.gamma != o.gamma() + 1) continue;
        const Graph h = path_addition(g, u, v, 1);
        const Vertex x1 = g.order();
        const int without = gamma(delete_vertices(h, VertexSet::single(x1)).graph);
        c.expect(without < gamma(h), "k=1 increase => x1 ∈ V⁻(G_{u,v,1})", "critical", "not critical",
                 {u, v, 1, p.clause});
    }
}

inline void graph6_roundtrip(const Graph& g, const TheoremOracle&, Checker& c) {
    const std::string s = emit_graph6(g);
    const Graph back = parse_graph6(s);
    c.expect(back == g, "parse(emit(g)) = g", s, emit_graph6(back));
    c.expect(emit_graph6(back) == s, "emit(parse(s)) = s", s, emit_graph6(back));
}

inline void epa_equals_2(const Graph& g, const TheoremOracle&, Checker& c) {
    if (g.order() < 2) return;
    const auto a = pa_profile(g).aggregates;
    c.expect(a.Epa == PaValue::finite(2), "Epa = 2", "2", a.Epa.to_string());
}

} // namespace suites

/// All suites in canonical report order.
inline const std::vector<Suite>& registry() {
    static const std::vector<Suite> r{
        {"oracle-equivalence", "predicted γ(G_{u,v,k}) and pa equal the solver's", suites::oracle_equivalence},
        {"theorem-tri", "adjacent pairs: γ(G_{u,v,3}) = γ+1", suites::theorem_tri},
        {"theorem-five", "nonadjacent pairs: γ(G_{u,v,k}) > γ for k = 5, 6", suites::theorem_five},
        {"aggregate-bounds", "range and ordering of epa, Epa, epa_bar, Epa_bar", suites::aggregate_bounds},
        {"characterizations", "closed-form aggregate characterizations match the profile", suites::characterizations},
        {"regions", "class implications and region partition", suites::regions},
        {"sum-bounds", "sum inequalities on connected noncomplete graphs with edges", suites::sum_bounds},
        {"lemmas", "subdivision, edge addition, bad/critical vertex and chain properties", suites::lemmas},
        {"x1-critical", "a k=1 increase makes the path vertex critical", suites::x1_critical},
        {"graph6-roundtrip", "graph6 encode/decode identity", suites::graph6_roundtrip},
        {"epa-equals-2", "Epa = 2 (a family claim, not part of 'all')", suites::epa_equals_2, false},
    };
    return r;
}

/// Expands "all" and validates names; result follows registry order.
inline std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
    std::vector<std::string> out;
    for (const auto& s : registry()) {
        bool wanted = false;
        for (const auto& q : requested) wanted = wanted || q == s.name || (q == "all" && s.in_all);
        if (wanted) out.push_back(s.name);
    }
    for (const auto& q : requested) {
        if (q == "all") continue;
        bool known = false;
        for (const auto& s : registry()) known = known || s.name == q;
        if (!known) throw GraphError("unknown suite '" + q + "'");
    }
    return out;
}

struct CorpusIssue {
    std::size_t index;
    std::string label;
    std::string error;
};

struct VerificationReport {
    CorpusSpec config;
    std::vector<std::string> suite_names;
    std::size_t graphs = 0;
    std::vector<SuiteResult> suites;
    std::vector<Counterexample> counterexamples;
    std::vector<CorpusIssue> corpus_errors;
    std::size_t max_counterexamples_per_suite = 0;
    double total_seconds = 0.0;

    bool passed() const {
        return counterexamples.empty() &&
               std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
    }

    /// Stable JSON. Wall-clock data lives under "timing" and is omitted when
    /// `with_timing` is false.
    nlohmann::json to_json(bool with_timing = true) const {
        using nlohmann::json;
        json cfg{{"mode", mode_name(config.mode)},
                 {"n_min", config.n_min},
                 {"n_max", config.n_max},
                 {"connected_only", config.connected_only},
                 {"suites", suite_names}};
        if (config.mode == CorpusMode::exhaustive) cfg["cap"] = config.cap;
        if (config.mode == CorpusMode::random)
            cfg["random"] = {{"count", config.count}, {"p", config.p}, {"seed", config.seed}, {"prng", kPrng}};
        if (config.mode == CorpusMode::file) cfg["file"] = config.path;
        if (config.mode == CorpusMode::family) cfg["families"] = config.families;

        json suites_json = json::object();
        for (const auto& s : suites) suites_json[s.name] = {{"passed", s.passed}, {"failed", s.failed}};

        json ces = json::array();
        for (const auto& c : counterexamples) {
            json j{{"suite", c.suite},     {"check", c.check},       {"corpus_label", c.corpus_label},
                   {"graph6", c.graph6},   {"expected", c.expected}, {"actual", c.actual},
                   {"clause", c.clause}};
            j["u"] = c.u ? json(*c.u) : json(nullptr);
            j["v"] = c.v ? json(*c.v) : json(nullptr);
            j["k"] = c.k ? json(*c.k) : json(nullptr);
            ces.push_back(std::move(j));
        }
        json errs = json::array();
        for (const auto& e : corpus_errors) errs.push_back({{"index", e.index}, {"label", e.label}, {"error", e.error}});

        json out{{"schema", kSchema},   {"config", cfg},          {"graphs", graphs},
                 {"suites", suites_json}, {"counterexamples", ces}, {"corpus_errors", errs},
                 {"passed", passed()}};
        if (with_timing) {
            json t{{"total_seconds", total_seconds}};
            for (const auto& s : suites) t["suites"][s.name] = s.seconds;
            out["timing"] = t;
        }
        return out;
    }

    std::string table() const {
        std::ostringstream os;
        os << "corpus: " << mode_name(config.mode) << ", " << graphs << " graphs";
        if (!corpus_errors.empty()) os << ", " << corpus_errors.size() << " unreadable entries";
        os << "\n";
        os << std::left << std::setw(22) << "suite" << std::right << std::setw(12) << "passed" << std::setw(10)
           << "failed" << std::setw(11) << "seconds" << "\n";
        for (const auto& s : suites)
            os << std::left << std::setw(22) << s.name << std::right << std::setw(12) << s.passed << std::setw(10)
               << s.failed << std::setw(11) << std::fixed << std::setprecision(2) << s.seconds << "\n";
        for (const auto& c : counterexamples) {
            os << "COUNTEREXAMPLE [" << c.suite << "] " << c.check << " graph6=" << c.graph6;
            if (c.u) os << " u=" << *c.u;
            if (c.v) os << " v=" << *c.v;
            if (c.k) os << " k=" << *c.k;
            os << " expected=" << c.expected << " actual=" << c.actual;
            if (!c.clause.empty()) os << " clause=" << c.clause;
            os << "\n";
        }
        for (const auto& e : corpus_errors) os << "UNREADABLE #" << e.index << " " << e.label << ": " << e.error << "\n";
        os << (passed() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
};

/// Worker count from PADOM_WORKERS, else the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        const long w = std::strtol(env, nullptr, 10);
        if (w > 0) return static_cast<unsigned>(w);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct RunOptions {
    unsigned workers = 0; ///< 0: worker_count()
    std::size_t max_counterexamples_per_suite = 25;
};

/// Evaluates every selected suite on every graph of the corpus. Results are
/// merged in corpus order, so the report does not depend on scheduling.
inline VerificationReport run_verification(const CorpusSpec& spec, const std::vector<std::string>& suite_names,
                                           RunOptions options = {}) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    VerificationReport report;
    report.config = spec;
    report.suite_names = resolve_suites(suite_names);
    report.max_counterexamples_per_suite = options.max_counterexamples_per_suite;

    std::vector<const Suite*> selected;
    for (const auto& name : report.suite_names)
        for (const auto& s : registry())
            if (s.name == name) selected.push_back(&s);

    const auto corpus = build_corpus(spec);

    struct Outcome {
        std::vector<long> passed, failed;
        std::vector<double> seconds;
        std::vector<std::vector<Counterexample>> failures;
    };
    std::vector<Outcome> outcomes(corpus.size());

    auto evaluate = [&](std::size_t index) {
        const auto& entry = corpus[index];
        if (!entry.graph) return;
        Outcome& out = outcomes[index];
        out.passed.assign(selected.size(), 0);
        out.failed.assign(selected.size(), 0);
        out.seconds.assign(selected.size(), 0.0);
        out.failures.resize(selected.size());
        const TheoremOracle oracle(*entry.graph);
        for (std::size_t s = 0; s < selected.size(); ++s) {
            const auto ts = clock::now();
            Checker c(selected[s]->name, entry.label, *entry.graph);
            try {
                selected[s]->run(*entry.graph, oracle, c);
            } catch (const std::exception& e) {
                c.expect(false, "suite raised an exception", "no exception", e.what());
            }
            out.passed[s] = c.passed();
            out.failed[s] = c.failed();
            out.failures[s] = std::move(c.failures());
            out.seconds[s] = std::chrono::duration<double>(clock::now() - ts).count();
        }
    };

    const unsigned workers = std::max(1u, options.workers ? options.workers : worker_count());
    if (workers == 1 || corpus.size() < 2) {
        for (std::size_t i = 0; i < corpus.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < corpus.size(); i = next++) evaluate(i);
            });
        for (auto& t : pool) t.join();
    }

    report.suites.resize(selected.size());
    for (std::size_t s = 0; s < selected.size(); ++s) report.suites[s].name = selected[s]->name;
    std::vector<std::size_t> kept(selected.size(), 0);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!corpus[i].graph) {
            report.corpus_errors.push_back({i, corpus[i].label, corpus[i].error});
            continue;
        }
        ++report.graphs;
        const auto& out = outcomes[i];
        for (std::size_t s = 0; s < selected.size(); ++s) {
            report.suites[s].passed += out.passed[s];
            report.suites[s].failed += out.failed[s];
            report.suites[s].seconds += out.seconds[s];
            for (const auto& ce : out.failures[s]) {
                if (kept[s] >= options.max_counterexamples_per_suite) break;
                report.counterexamples.push_back(ce);
                ++kept[s];
            }
        }
    }
    report.total_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return report;
}

} // namespace padom::verify
