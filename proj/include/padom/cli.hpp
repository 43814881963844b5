#pragma once

// Command-line front end. Kept in a header so tests can drive it with
// in-memory streams.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "padom/padom.hpp"

namespace padom::cli {

enum ExitCode { kOk = 0, kCounterexample = 1, kUsage = 2 };

inline nlohmann::json pa_json(PaValue v) {
    return v.is_infinite() ? nlohmann::json("inf") : nlohmann::json(v.value());
}

inline nlohmann::json set_json(VertexSet s) { return s.to_vector(); }

inline nlohmann::json aggregates_json(const PaAggregates& a) {
    return {{"epa", pa_json(a.epa)}, {"Epa", pa_json(a.Epa)}, {"epa_bar", pa_json(a.epa_bar)}, {"Epa_bar", pa_json(a.Epa_bar)}};
}

inline nlohmann::json report_json(const DominationReport& r) {
    return {{"schema", "padom.classify/1"},
            {"gamma", r.gamma},
            {"witness", set_json(r.witness)},
            {"good", set_json(r.good)},
            {"bad", set_json(r.bad)},
            {"critical", set_json(r.critical)},
            {"v_minus", set_json(r.v_minus)},
            {"i_number", r.i_number},
            {"strong_equality", r.strong_equality}};
}

inline nlohmann::json profile_json(const PaProfile& p) {
    nlohmann::json pairs = nlohmann::json::object();
    for (const auto& pp : p.pairs) pairs[std::to_string(pp.u) + "-" + std::to_string(pp.v)] = pa_json(pp.pa);
    auto out = aggregates_json(p.aggregates);
    out["schema"] = "padom.profile/1";
    out["gamma"] = p.gamma;
    out["pairs"] = pairs;
    return out;
}

inline nlohmann::json regions_json(const RegionClass& r) {
    return {{"schema", "padom.regions/1"}, {"in_A", r.in_A},   {"in_A1", r.in_A1}, {"in_A2", r.in_A2},
            {"in_A3", r.in_A3},            {"region", region_name(r.region)}};
}

class Runner {
public:
    Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    int run(std::vector<std::string> args) {
        CLI::App app{"Domination number under path addition", "padom"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "Expand all help");

        std::string file, format = "auto";
        bool json = false;
        auto add_input = [&](CLI::App* sub) {
            sub->add_option("FILE", file, "graph6 or edge-list file, '-' for stdin")->required();
            sub->add_option("--format", format, "auto, graph6 or edgelist")
                ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
            sub->add_flag("--json", json, "JSON output");
        };

        auto* gamma_cmd = app.add_subcommand("gamma", "domination number and a minimum dominating set");
        add_input(gamma_cmd);
        auto* classify_cmd = app.add_subcommand("classify", "γ-good/bad/critical vertices, V⁻, i(G)");
        add_input(classify_cmd);
        auto* pa_cmd = app.add_subcommand("pa", "pa(u,v) computed directly and predicted");
        add_input(pa_cmd);
        Vertex u = -1, v = -1;
        pa_cmd->add_option("-u", u, "first vertex")->required();
        pa_cmd->add_option("-v", v, "second vertex")->required();
        auto* profile_cmd = app.add_subcommand("profile", "pa for every pair and the four aggregates");
        add_input(profile_cmd);
        auto* regions_cmd = app.add_subcommand("regions", "membership in the epa = 3 classes and region tag");
        add_input(regions_cmd);

        auto* verify_cmd = app.add_subcommand("verify", "run verification suites over a corpus");
        std::string mode = "exhaustive";
        int n = -1, n_min = 1, n_max = 5, cap = kDefaultEnumerationCap, count = 100;
        double p = 0.5;
        std::uint64_t seed = 42;
        bool connected = false, no_timing = false;
        std::string corpus_file;
        std::vector<std::string> families, suite_names{"all"};
        verify_cmd->add_option("--mode", mode, "exhaustive, random, file or family")
            ->check(CLI::IsMember({"exhaustive", "random", "file", "family"}));
        verify_cmd->add_option("--n", n, "single order (sets --n-min and --n-max)");
        verify_cmd->add_option("--n-min", n_min, "smallest order");
        verify_cmd->add_option("--n-max", n_max, "largest order");
        verify_cmd->add_option("--cap", cap, "largest order allowed in exhaustive mode");
        verify_cmd->add_flag("--connected", connected, "connected graphs only");
        verify_cmd->add_option("--count", count, "random: number of graphs");
        verify_cmd->add_option("--p", p, "random: edge probability");
        verify_cmd->add_option("--seed", seed, "random: seed");
        verify_cmd->add_option("--file", corpus_file, "file: corpus path");
        verify_cmd->add_option("--format", format, "file: auto, graph6 or edgelist")
            ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
        verify_cmd->add_option("--family", families, "family: spec such as crown:3 (repeatable)");
        verify_cmd->add_option("--suite", suite_names, "suite names or 'all' (repeatable)");
        verify_cmd->add_flag("--json", json, "JSON report");
        verify_cmd->add_flag("--no-timing", no_timing, "omit the timing field from JSON");

        auto* gen_cmd = app.add_subcommand("gen", "emit a named graph");
        std::string family, params, out_format = "graph6";
        gen_cmd->add_option("--family", family, "family name or full spec, e.g. rook or join(edgeless:3,edgeless:3)")
            ->required();
        gen_cmd->add_option("--params", params, "comma-separated integer parameters");
        gen_cmd->add_option("--format", out_format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << "\n";
            return kUsage;
        }

        try {
            if (*gen_cmd) return gen(params.empty() ? family : family + ":" + params, out_format);
            if (*verify_cmd) {
                verify::CorpusSpec spec;
                spec.mode = verify::mode_from_name(mode);
                spec.n_min = n >= 0 ? n : n_min;
                spec.n_max = n >= 0 ? n : n_max;
                spec.cap = cap;
                spec.connected_only = connected;
                spec.count = count;
                spec.p = p;
                spec.seed = seed;
                spec.path = corpus_file;
                spec.format = parse_format(format);
                spec.families = families;
                return run_verify(spec, suite_names, json, !no_timing);
            }

            const Graph g = load(file, parse_format(format));
            if (*gamma_cmd) return gamma_command(g, json);
            if (*classify_cmd) return classify_command(g, json);
            if (*pa_cmd) return pa_command(g, u, v, json);
            if (*profile_cmd) return profile_command(g, json);
            if (*regions_cmd) return regions_command(g, json);
        } catch (const InternalInconsistency& e) {
            err_ << "internal inconsistency: " << e.what() << "\n";
            return kCounterexample;
        } catch (const std::exception& e) {
            err_ << "error: " << e.what() << "\n";
            return kUsage;
        }
        return kUsage;
    }

private:
    static GraphFormat parse_format(const std::string& f) {
        if (f == "graph6") return GraphFormat::graph6;
        if (f == "edgelist") return GraphFormat::edge_list;
        return GraphFormat::automatic;
    }

    Graph load(const std::string& path, GraphFormat format) {
        std::stringstream buf;
        if (path == "-") {
            buf << in_.rdbuf();
        } else {
            std::ifstream f(path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open '" + path + "'");
            buf << f.rdbuf();
        }
        return read_graph(buf.str(), format);
    }

    int gen(const std::string& spec, const std::string& format) {
        const Graph g = generate_family(spec);
        out_ << (format == "edgelist" ? emit_edge_list(g) : emit_graph6(g) + "\n");
        return kOk;
    }

    int gamma_command(const Graph& g, bool json) {
        const auto d = minimum_dominating_set(g);
        if (json)
            out_ << nlohmann::json{{"schema", "padom.gamma/1"}, {"gamma", d.size}, {"witness", set_json(d.members)}}.dump(2)
                 << "\n";
        else
            out_ << "gamma " << d.size << "\nwitness " << d.members.to_string() << "\n";
        return kOk;
    }

    int classify_command(const Graph& g, bool json) {
        const auto r = classify_vertices(g);
        if (json) {
            out_ << report_json(r).dump(2) << "\n";
            return kOk;
        }
        out_ << "gamma " << r.gamma << "  witness " << r.witness.to_string() << "\n"
             << "i " << r.i_number << "  strong_equality " << (r.strong_equality ? "yes" : "no") << "\n"
             << "v_minus " << r.v_minus.to_string() << "\n"
             << "vertex  good  critical\n";
        for (Vertex x = 0; x < g.order(); ++x)
            out_ << std::setw(6) << x << "  " << (r.good.contains(x) ? "good" : "bad ") << "  "
                 << (r.critical.contains(x) ? "yes" : "no") << "\n";
        return kOk;
    }

    int pa_command(const Graph& g, Vertex u, Vertex v, bool json) {
        const auto direct = pa_direct(g, u, v);
        const auto predicted = TheoremOracle(g).predict_pa(u, v);
        const bool agree = direct == predicted.pa;
        if (json) {
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& s : predicted.steps)
                steps.push_back({{"k", s.k},
                                 {"gamma", s.gamma ? nlohmann::json(*s.gamma) : nlohmann::json(nullptr)},
                                 {"clause", s.clause}});
            out_ << nlohmann::json{{"schema", "padom.pa/1"},
                                   {"u", u},
                                   {"v", v},
                                   {"adjacent", predicted.adjacent},
                                   {"direct", pa_json(direct)},
                                   {"predicted", pa_json(predicted.pa)},
                                   {"clause", predicted.clause},
                                   {"steps", steps},
                                   {"agree", agree}}
                        .dump(2)
                 << "\n";
        } else {
            out_ << "pa(" << u << "," << v << ") " << (predicted.adjacent ? "adjacent" : "nonadjacent") << "\n"
                 << "direct " << direct.to_string() << "\n"
                 << "predicted " << predicted.pa.to_string() << "  clause " << predicted.clause << "\n";
            if (!agree) out_ << "MISMATCH\n";
        }
        return agree ? kOk : kCounterexample;
    }

    int profile_command(const Graph& g, bool json) {
        const auto p = pa_profile(g);
        if (json) {
            out_ << profile_json(p).dump(2) << "\n";
            return kOk;
        }
        out_ << "gamma " << p.gamma << "\n";
        for (const auto& pp : p.pairs)
            out_ << pp.u << "-" << pp.v << (pp.adjacent ? " edge     " : " non-edge ") << pp.pa.to_string() << "\n";
        const auto& a = p.aggregates;
        out_ << "epa " << a.epa.to_string() << "\nEpa " << a.Epa.to_string() << "\nepa_bar " << a.epa_bar.to_string()
             << "\nEpa_bar " << a.Epa_bar.to_string() << "\n";
        return kOk;
    }

    int regions_command(const Graph& g, bool json) {
        const auto r = classify_regions(g);
        if (json) {
            out_ << regions_json(r).dump(2) << "\n";
            return kOk;
        }
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        out_ << "region " << region_name(r.region) << "\nA " << yn(r.in_A) << "\nA1 " << yn(r.in_A1) << "\nA2 "
             << yn(r.in_A2) << "\nA3 " << yn(r.in_A3) << "\n";
        return kOk;
    }

    int run_verify(const verify::CorpusSpec& spec, const std::vector<std::string>& suites, bool json, bool timing) {
        const auto report = verify::run_verification(spec, suites);
        if (json)
            out_ << report.to_json(timing).dump(2) << "\n";
        else
            out_ << report.table();
        if (!report.passed()) return kCounterexample;
        return report.corpus_errors.empty() ? kOk : kUsage;
    }

    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
};

/// Entry point shared by the tool and the tests. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    return Runner(in, out, err).run(args);
}

} // namespace padom::cli
