// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. `--long` adds the exhaustive n = 6 corpus.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "padom/padom.hpp"

#include "brute_force.hpp"

using namespace padom;
using verify::CorpusMode;
using verify::CorpusSpec;
using verify::VerificationReport;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

bool g_long = false;

CorpusSpec exhaustive(int n_max) {
    CorpusSpec s;
    s.mode = CorpusMode::exhaustive;
    s.n_min = 1;
    s.n_max = n_max;
    return s;
}

CorpusSpec random_n8() {
    CorpusSpec s;
    s.mode = CorpusMode::random;
    s.n_min = s.n_max = 8;
    s.p = 0.4;
    s.count = 500;
    s.seed = 42;
    return s;
}

std::vector<CorpusSpec> standard_corpora() {
    std::vector<CorpusSpec> out{exhaustive(5), random_n8()};
    if (g_long) {
        auto six = exhaustive(6);
        six.n_min = 6;
        out.push_back(six);
    }
    return out;
}

void require_report(Outcome& o, const VerificationReport& r, const std::string& label) {
    long checks = 0;
    for (const auto& s : r.suites) checks += s.passed + s.failed;
    o.detail << " " << label << ": " << r.graphs << " graphs, " << checks << " checks, " << r.counterexamples.size()
             << " counterexamples;";
    o.require(r.passed() && r.corpus_errors.empty(), label);
    if (!r.counterexamples.empty()) {
        const auto& c = r.counterexamples.front();
        o.detail << " first: " << c.check << " graph6=" << c.graph6 << " expected=" << c.expected
                 << " actual=" << c.actual;
    }
}

void run_suite_on_corpora(Outcome& o, const std::string& suite, const std::vector<CorpusSpec>& corpora) {
    for (const auto& spec : corpora) {
        const std::string label = spec.mode == CorpusMode::random
                                      ? "random n=" + std::to_string(spec.n_min)
                                      : "exhaustive n=" + std::to_string(spec.n_min) + ".." + std::to_string(spec.n_max);
        require_report(o, verify::run_verification(spec, {suite}), label);
    }
}

// ---------------------------------------------------------------------------

Outcome criterion_oracle_equivalence() {
    Outcome o;
    const auto t0 = Clock::now();
    require_report(o, verify::run_verification(exhaustive(5), {"oracle-equivalence"}), "exhaustive n<=5");
    const double secs = seconds_since(t0);
    o.detail << " " << secs << " s;";
    o.require(secs < 60.0, "n<=5 run under one minute");

    // Independent cross-check: every predicted step against a subset-enumeration γ.
    long steps = 0, mismatches = 0;
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_graph(n, false, [&](const Graph& g) {
            const TheoremOracle oracle(g);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) {
                    const auto p = oracle.predict_pa(u, v);
                    for (const auto& s : p.steps) {
                        if (!s.gamma) continue;
                        ++steps;
                        if (*s.gamma != brute::gamma(path_addition(g, u, v, s.k))) ++mismatches;
                    }
                }
        });
    }
    o.detail << " brute-force cross-check: " << steps << " steps, " << mismatches << " mismatches;";
    o.require(mismatches == 0, "brute-force cross-check");

    if (g_long) {
        auto six = exhaustive(6);
        six.n_min = 6;
        const auto t1 = Clock::now();
        require_report(o, verify::run_verification(six, {"oracle-equivalence"}), "exhaustive n=6");
        const double s6 = seconds_since(t1);
        o.detail << " " << s6 << " s;";
        o.require(s6 < 900.0, "n=6 run under fifteen minutes");
    }
    return o;
}

Outcome criterion_theorem_tri() {
    Outcome o;
    run_suite_on_corpora(o, "theorem-tri", standard_corpora());
    return o;
}

Outcome criterion_theorem_five() {
    Outcome o;
    run_suite_on_corpora(o, "theorem-five", standard_corpora());
    return o;
}

Outcome criterion_aggregate_bounds() {
    Outcome o;
    std::vector<CorpusSpec> corpora{exhaustive(5)};
    if (g_long) corpora = standard_corpora();
    run_suite_on_corpora(o, "aggregate-bounds", corpora);
    return o;
}

Outcome criterion_characterizations() {
    Outcome o;
    run_suite_on_corpora(o, "characterizations", {exhaustive(5)});

    // Independent check of the biconditionals from subset enumeration alone.
    long graphs = 0, mismatches = 0;
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_graph(n, false, [&](const Graph& g) {
            ++graphs;
            const auto a = pa_profile(g).aggregates;
            const int gm = brute::gamma(g);
            const auto sets = brute::gamma_sets(g);
            bool all_indep = true, all_clique = true;
            for (auto m : sets) {
                const VertexSet s(m);
                all_indep = all_indep && is_independent(g, s);
                all_clique = all_clique && is_clique(g, s);
            }
            bool drop_two = false;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (!g.adjacent(u, v) && brute::gamma(delete_vertices(g, VertexSet::single(u) | VertexSet::single(v)).graph) == gm - 2)
                        drop_two = true;
            const bool has_edges = g.size() > 0;
            const bool complete = is_complete(g);
            bool ok = true;
            if (has_edges) {
                ok = ok && ((a.Epa == PaValue::finite(2)) == all_indep);
                ok = ok && ((a.Epa == PaValue::finite(3)) == !all_indep);
            }
            if (!complete) {
                ok = ok && ((a.Epa_bar == PaValue::finite(1)) == (gm == 1));
                ok = ok && ((a.Epa_bar == PaValue::finite(2)) == (gm >= 2 && all_clique));
                ok = ok && ((a.Epa_bar == PaValue::finite(5)) == drop_two);
                ok = ok && ((a.epa_bar == PaValue::finite(5)) == !has_edges);
            }
            if (!ok) ++mismatches;
        });
    }
    o.detail << " brute-force biconditionals: " << graphs << " graphs, " << mismatches << " mismatches;";
    o.require(mismatches == 0, "brute-force biconditionals");
    return o;
}

Outcome criterion_fixtures() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int n : {3, 4}) {
        const Graph g = generate_family("rook:" + std::to_string(n));
        const auto p = pa_profile(g);
        o.require(p.gamma == n, "γ(rook " + std::to_string(n) + ") = " + std::to_string(n));
        o.require(p.aggregates.epa_bar == PaValue::finite(4) && p.aggregates.Epa_bar == PaValue::finite(4),
                  "rook " + std::to_string(n) + " epa_bar = Epa_bar = 4");
        o.detail << " rook:" << n << " γ=" << p.gamma << " epa_bar=" << p.aggregates.epa_bar.to_string()
                 << " Epa_bar=" << p.aggregates.Epa_bar.to_string() << ";";
    }
    o.require(brute::gamma(generate_family("rook:3")) == 3, "brute γ(rook 3) = 3");
    for (int m : {3, 4})
        for (int n : {3, 4}) {
            const std::string spec = "complete_bipartite:" + std::to_string(m) + "," + std::to_string(n);
            const auto a = pa_profile(generate_family(spec)).aggregates;
            o.require(a.Epa_bar == PaValue::finite(2), spec + " Epa_bar = 2");
        }
    o.detail << " K_{m,n} Epa_bar checked for m,n in {3,4};";
    for (const char* spec : {"crown:3", "crown:4", "circulant:9,1,8", "circulant:15,1,2,13,14",
                             "generalized_petersen:8,1", "generalized_petersen:8,3"}) {
        const auto a = pa_profile(generate_family(spec)).aggregates;
        o.require(a.Epa == PaValue::finite(2), std::string(spec) + " Epa = 2 (got " + a.Epa.to_string() + ")");
    }
    o.detail << " Epa = 2 family checked;";
    o.require(in_class_U(generate_family("cycle:5")), "C5 in U");
    o.require(in_class_U(generate_family("disjoint_union(complete:3,complete:3)")), "K3+K3 in U");
    o.require(!in_class_U(generate_family("disjoint_union(complete:2,complete:1)")), "K2+K1 not in U");
    const double secs = seconds_since(t0);
    o.detail << " " << secs << " s;";
    o.require(secs < 30.0, "fixtures under 30 s");
    return o;
}

Graph cycle_plus_y() {
    std::vector<Edge> es;
    for (int i = 0; i < 7; ++i) es.emplace_back(i, (i + 1) % 7);
    es.emplace_back(7, 0);
    es.emplace_back(7, 2);
    return build_graph(8, es);
}

Outcome criterion_regions() {
    Outcome o;
    const std::vector<std::pair<Graph, Region>> witnesses{
        {generate_family("corona(path:2)"), Region::R0},
        {generate_family("corona(path:3)"), Region::R0},
        {cycle_plus_y(), Region::R1},
        {generate_family("cycle:4"), Region::R3},
        {generate_family("cycle:7"), Region::R3},
        {generate_family("complete_bipartite:2,3"), Region::R4},
        {generate_family("complete_bipartite:2,4"), Region::R4},
        {generate_family("complete_bipartite:3,3"), Region::R5},
        {generate_family("complete_bipartite:4,4"), Region::R5},
    };
    for (const auto& [g, want] : witnesses) {
        const auto got = classify_regions(g).region;
        o.detail << " " << emit_graph6(g) << "->" << region_name(got) << ";";
        o.require(got == want, emit_graph6(g) + " expected " + region_name(want));
    }

    // R2 search: reported, never failed.
    CorpusSpec s;
    s.mode = CorpusMode::random;
    s.n_min = 2;
    s.n_max = 8;
    s.count = 3000;
    s.seed = 2;
    s.p = 0.5;
    std::string found;
    long searched = 0;
    for (const auto& e : verify::build_corpus(s)) {
        if (!e.graph || e.graph->size() == 0) continue;
        ++searched;
        if (classify_regions(*e.graph).region == Region::R2) {
            found = emit_graph6(*e.graph);
            break;
        }
    }
    o.detail << " R2 search over " << searched << " random graphs (n<=8, seed 2): "
             << (found.empty() ? "no witness found" : "witness " + found) << ";";
    return o;
}

Outcome criterion_sum_bounds() {
    Outcome o;
    run_suite_on_corpora(o, "sum-bounds", standard_corpora());
    const auto c4 = check_sum_bounds(generate_family("cycle:4"));
    std::vector<Edge> es;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) es.emplace_back(u, v);
    const Graph k6m = build_graph(6, es);
    const auto k6 = check_sum_bounds(k6m);
    for (const auto* r : {&c4, &k6}) {
        const int sum = r->aggregates.epa.value() + r->aggregates.epa_bar.value();
        o.require(sum == 7 && r->all(), "epa + epa_bar = 7 witness");
        o.detail << " epa+epa_bar=" << sum << ";";
    }
    return o;
}

Outcome criterion_lemmas() {
    Outcome o;
    std::vector<CorpusSpec> corpora{exhaustive(5)};
    if (g_long) {
        auto six = exhaustive(6);
        six.n_min = 6;
        corpora.push_back(six);
    }
    run_suite_on_corpora(o, "lemmas", corpora);
    return o;
}

Outcome criterion_graph6() {
    Outcome o;
    CorpusSpec s;
    s.mode = CorpusMode::random;
    s.n_min = 1;
    s.n_max = 8;
    s.count = 10000;
    s.p = 0.5;
    s.seed = 6;
    require_report(o, verify::run_verification(s, {"graph6-roundtrip"}), "random n=1..8");

    // Independent re-encoding of each sample, bit by bit.
    long mismatches = 0;
    for (const auto& e : verify::build_corpus(s)) {
        const Graph& g = *e.graph;
        const int n = g.order();
        std::string bits;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) bits += g.adjacent(u, v) ? '1' : '0';
        while (bits.size() % 6) bits += '0';
        std::string enc(1, static_cast<char>(63 + n));
        for (std::size_t i = 0; i < bits.size(); i += 6) enc += static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2));
        if (enc != emit_graph6(g) || !(parse_graph6(enc) == g)) ++mismatches;
    }
    o.detail << " independent encoder mismatches: " << mismatches << ";";
    o.require(mismatches == 0, "independent encoder");
    return o;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--long") {
            g_long = true;
        } else {
            std::cerr << "usage: acceptance [--long]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle-solver equivalence", criterion_oracle_equivalence},
        {"adjacent pairs increase by k=3", criterion_theorem_tri},
        {"nonadjacent pairs increase by k=5 and k=6", criterion_theorem_five},
        {"aggregate bounds", criterion_aggregate_bounds},
        {"aggregate characterizations", criterion_characterizations},
        {"named-graph fixtures", criterion_fixtures},
        {"region witnesses", criterion_regions},
        {"sum bounds", criterion_sum_bounds},
        {"lemma-level properties", criterion_lemmas},
        {"graph6 round trip", criterion_graph6},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << secs << ")"
                  << o.detail.str() << std::endl;
        if (!o.pass) ++failures;
    }
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
