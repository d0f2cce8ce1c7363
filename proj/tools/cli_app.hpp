// Command-line front end. Kept in a header so the test suite can drive it
// in-process; tools/lapsim.cpp only forwards main() here.
#pragma once

#include "lapsim/lapsim.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace lapsim::cli {

enum ExitCode : int { ok = 0, regression_failure = 1, input_error = 2, internal_error = 3 };

struct GraphSpec {
    std::string input;               // edge-list path, empty when a family is used
    std::string family;
    std::size_t n = 0;
    std::uint64_t seed = kDefaultSeed;
    bool whisker = false;
    std::string bridge_with;         // "kind:n" or an edge-list path
    std::string bridge_at = "1:1";
    std::vector<std::string> attach_paths;   // "v:k", applied in order
};

struct RunConfig {
    GraphSpec graph;
    std::string strategy;
    long long fpp_cap = 10'000'000;
    long long idp_cap = 100'000;
    std::string format = "text";
    unsigned jobs = 1;
};

inline std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, const std::string& what) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument("");
        std::size_t used_a = 0, used_b = 0;
        std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        long long x = std::stoll(a, &used_a), y = std::stoll(b, &used_b);
        if (used_a != a.size() || used_b != b.size() || x < 0 || y < 0) throw std::invalid_argument("");
        return {static_cast<std::size_t>(x), static_cast<std::size_t>(y)};
    } catch (const std::exception&) {
        throw ParseError(what + ": expected 'a:b' with nonnegative integers, got '" + text + "'");
    }
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_edge_list(in);
}

/// "kind:n" names a family member; anything else is read as an edge-list path.
inline Graph graph_from_token(const std::string& token, std::uint64_t seed) {
    auto colon = token.find(':');
    if (colon != std::string::npos) {
        std::string kind = token.substr(0, colon);
        try {
            auto k = parse_family_kind(kind);
            auto n = parse_pair("0:" + token.substr(colon + 1), "graph spec").second;
            return family(k, n, seed);
        } catch (const ParseError&) {
            // fall back to treating it as a path
        }
    }
    return read_graph_file(token);
}

/// Applies bridge, whisker, then each tail in order; `id` describes the result.
inline Graph apply_operations(Graph g, const GraphSpec& spec, std::string& id) {
    if (!spec.bridge_with.empty()) {
        Graph other = graph_from_token(spec.bridge_with, spec.seed);
        auto [i, i2] = parse_pair(spec.bridge_at, "--bridge-at");
        g = bridge(g, other, i, i2);
        id = "bridge(" + id + "," + spec.bridge_with + "@" + spec.bridge_at + ")";
    }
    if (spec.whisker) {
        g = whisker(g);
        id = "W(" + id + ")";
    }
    for (const auto& tail : spec.attach_paths) {
        auto [v, k] = parse_pair(tail, "--attach-path");
        g = attach_path(g, v, k);
        id += "+path(" + tail + ")";
    }
    return g;
}

inline Graph build_graph(const GraphSpec& spec, std::string& id) {
    if (spec.input.empty() == spec.family.empty())
        throw ParseError("give exactly one graph source: --input FILE or --family KIND --n N");
    if (!spec.input.empty()) {
        id = spec.input;
        return apply_operations(read_graph_file(spec.input), spec, id);
    }
    auto kind = parse_family_kind(spec.family);
    if (spec.n == 0) throw ParseError("--family needs --n");
    id = spec.family + ":" + std::to_string(spec.n);
    if (kind == FamilyKind::random_tree) id += " seed=" + std::to_string(spec.seed);
    return apply_operations(family(kind, spec.n, spec.seed), spec, id);
}

inline AnalysisOptions analysis_options(const RunConfig& c) {
    AnalysisOptions a;
    if (!c.strategy.empty()) a.strategy = parse_strategy(c.strategy);
    a.limits.fpp_cap = c.fpp_cap;
    a.limits.jobs = c.jobs;
    a.idp_cap = c.idp_cap;
    return a;
}

inline void emit(std::ostream& out, const PropertyReport& r, const std::string& format) {
    if (format == "json")
        out << render_json(r) << '\n';
    else if (format == "csv")
        out << csv_header() << '\n' << csv_row(r) << '\n';
    else
        render_text(out, r);
}

// ---------------------------------------------------------------------------

inline int cmd_report(const RunConfig& c, std::ostream& out) {
    std::string id;
    Graph g = build_graph(c.graph, id);
    emit(out, analyze(g, analysis_options(c), id), c.format);
    return ok;
}

struct BatchSpec {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t step = 1;
    std::size_t count = 0;
};

struct BatchRow {
    std::optional<PropertyReport> report;
    std::size_t n = 0;
    std::string error;
    bool inconsistent = false;
};

inline int cmd_batch(const RunConfig& c, const BatchSpec& b, std::ostream& out) {
    if (!c.graph.input.empty()) throw ParseError("batch works on --family ranges, not --input");
    if (c.graph.family.empty()) throw ParseError("batch needs --family");
    parse_family_kind(c.graph.family);
    std::vector<GraphSpec> specs;
    if (b.count > 0) {
        if (c.graph.n == 0) throw ParseError("batch --count needs --n");
        for (std::size_t k = 0; k < b.count; ++k) {
            GraphSpec s = c.graph;
            s.seed = c.graph.seed + k;
            specs.push_back(s);
        }
    } else {
        if (b.n_min == 0 || b.n_max < b.n_min || b.step == 0)
            throw ParseError("batch needs --n-min <= --n-max (and --step >= 1), or --count");
        for (std::size_t n = b.n_min; n <= b.n_max; n += b.step) {
            GraphSpec s = c.graph;
            s.n = n;
            specs.push_back(s);
        }
    }

    RunConfig row_config = c;
    row_config.jobs = 1;
    const AnalysisOptions options = analysis_options(row_config);
    std::vector<BatchRow> rows(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            rows[i].n = specs[i].n;
            try {
                std::string id;
                Graph g = build_graph(specs[i], id);
                rows[i].report = analyze(g, options, id);
            } catch (const InconsistencyError& e) {
                rows[i].error = e.what();
                rows[i].inconsistent = true;
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(c.jobs, static_cast<unsigned>(specs.size())));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    if (c.format == "json") {
        Json all = Json::array();
        for (const auto& r : rows)
            all.push_back(r.report ? to_json(*r.report) : Json{{"n", r.n}, {"error", r.error}});
        out << all.dump(2) << '\n';
    } else if (c.format == "csv") {
        out << csv_header() << '\n';
        for (const auto& r : rows)
            out << (r.report ? csv_row(*r.report) : std::to_string(r.n) + ",,,,,,,,," + csv_escape("error: " + r.error))
                << '\n';
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out << '\n';
            if (rows[i].report)
                render_text(out, *rows[i].report);
            else
                out << "n " << rows[i].n << ": error: " << rows[i].error << '\n';
        }
    }
    for (const auto& r : rows)
        if (r.inconsistent) return internal_error;
    return ok;
}

inline int cmd_verify(const RunConfig& c, const RegressionOptions& base, std::ostream& out) {
    RegressionOptions o = base;
    o.seed = c.graph.seed;
    o.limits.fpp_cap = c.fpp_cap;
    o.jobs = c.jobs;
    auto report = run_regression(o);
    if (c.format == "json") {
        Json cases = Json::array();
        for (const auto& r : report.results)
            cases.push_back({{"group", r.group}, {"name", r.name}, {"passed", r.passed}, {"failures", r.failures},
                             {"notes", r.notes}});
        out << Json{{"seed", report.seed}, {"failures", report.failures()}, {"cases", cases}}.dump(2) << '\n';
    } else {
        print_regression(out, report);
    }
    return report.all_passed() ? ok : regression_failure;
}

inline int cmd_simplex(const RunConfig& c, std::ostream& out) {
    std::string id;
    LaplacianSimplex s(build_graph(c.graph, id));
    const IntMatrix& v = s.vertex_matrix();
    Json vertices = Json::array();
    for (std::size_t i = 0; i < v.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < v.cols(); ++j) row.push_back(integer_to_json(v(i, j)));
        vertices.push_back(row);
    }
    Json facet_list = Json::array();
    for (const auto& f : facets(s)) {
        Json dual = Json::array(), normal = Json::array();
        for (const auto& x : f.dual_vertex) dual.push_back(to_string(x));
        for (const auto& x : f.primitive_normal) normal.push_back(integer_to_json(x));
        facet_list.push_back({{"dual_vertex", dual}, {"normal", normal}, {"local_index", integer_to_json(f.local_index)}});
    }
    Json j{{"id", id},
           {"graph", graph_to_json(s.graph())},
           {"vertices", vertices},
           {"kappa", integer_to_json(s.kappa())},
           {"volume", integer_to_json(s.normalized_volume())},
           {"facets", facet_list}};
    out << j.dump(2) << '\n';
    return ok;
}

inline int cmd_edges(const RunConfig& c, std::ostream& out) {
    std::string id;
    write_edge_list(out, build_graph(c.graph, id));
    return ok;
}

// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laplacian simplex toolkit: h*-vectors, reflexivity, and IDP checks for T_G"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig c;
    app.add_option("--input", c.graph.input, "Edge-list file ('n m' header, then m lines 'u v')");
    app.add_option("--family", c.graph.family, "Graph family: path, cycle, complete, star, random_tree");
    app.add_option("--n", c.graph.n, "Vertex count for --family");
    app.add_option("--seed", c.graph.seed, "Seed for random families and sweeps")->capture_default_str();
    app.add_flag("--whisker", c.graph.whisker, "Attach a pendant vertex to every vertex");
    app.add_option("--bridge-with", c.graph.bridge_with, "Bridge with a second graph: kind:n or an edge-list path");
    app.add_option("--bridge-at", c.graph.bridge_at, "Bridge endpoints i:i2")->capture_default_str();
    app.add_option("--attach-path", c.graph.attach_paths, "Attach a path of k edges at v (v:k); repeatable");
    app.add_option("--strategy", c.strategy,
                   "h* route: generic_snf, cycle_closed_form, complete_compositions, tree_closed_form, "
                   "dilate_interpolation");
    app.add_option("--fpp-cap", c.fpp_cap, "Largest parallelepiped (n * kappa) to enumerate")
        ->envname("LAPSIM_FPP_CAP")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--idp-cap", c.idp_cap, "Largest n * kappa for the IDP check")
        ->envname("LAPSIM_IDP_CAP")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", c.jobs, "Worker threads")
        ->envname("LAPSIM_JOBS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* report = app.add_subcommand("report", "Full property report for one graph");
    BatchSpec batch_spec;
    auto* batch = app.add_subcommand("batch", "One report row per family member");
    batch->add_option("--n-min", batch_spec.n_min, "Smallest n");
    batch->add_option("--n-max", batch_spec.n_max, "Largest n");
    batch->add_option("--step", batch_spec.step, "Step between sizes")->capture_default_str();
    batch->add_option("--count", batch_spec.count, "Number of seeds (seed, seed+1, ...) at size --n");

    RegressionOptions regression;
    auto* verify = app.add_subcommand("verify-paper", "Run the regression suite of known results");
    verify->add_option("--only", regression.only, "Restrict to groups (repeatable)");
    verify->add_flag("--no-fast-paths", regression.disable_fast_paths, "Route every h* through the enumeration");
    verify->add_option("--inject-kappa-fault", regression.perturb_kappa)->group("");

    auto* simplex = app.add_subcommand("simplex", "Vertex matrix and facet data of T_G as JSON");
    auto* edges = app.add_subcommand("edges", "Print the constructed graph as an edge list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (report->parsed()) return cmd_report(c, out);
        if (batch->parsed()) return cmd_batch(c, batch_spec, out);
        if (verify->parsed()) return cmd_verify(c, regression, out);
        if (simplex->parsed()) return cmd_simplex(c, out);
        if (edges->parsed()) return cmd_edges(c, out);
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return internal_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const FeasibilityError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return input_error;
}

}  // namespace lapsim::cli
