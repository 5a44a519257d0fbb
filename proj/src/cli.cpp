#include "ndl/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "ndl/anomaly.hpp"
#include "ndl/edgelist.hpp"
#include "ndl/graph6.hpp"
#include "ndl/json_out.hpp"
#include "ndl/oracle.hpp"
#include "ndl/profiles.hpp"
#include "ndl/transform.hpp"

namespace ndl {

namespace {

// largest finite shell index over all vertices; the default profile sweep
int max_shell_index(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto d = bfs_distances(g, v);
        for (int u = 0; u < g.vertex_count(); ++u)
            best = std::max(best, d.dist[u]);
    }
    return best;
}

int cmd_profile(const std::string& path, std::optional<int> k, std::ostream& out) {
    Graph g = load_graph_file(path);
    std::vector<int> ks;
    if (k) {
        ks.push_back(*k);
    } else {
        for (int i = 1; i <= std::max(1, max_shell_index(g)); ++i)
            ks.push_back(i);
    }
    Json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["degree_sequence"] = to_json(degree_sequence(g));
    Json profiles = Json::array();
    for (int kk : ks) {
        Json entry;
        entry["k"] = kk;
        Json per_vertex = Json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            per_vertex.push_back(to_json(nkdl_vertex(g, v, kk)));
        entry["per_vertex"] = per_vertex;
        entry["graph"] = to_json(nkdl_graph(g, kk));
        profiles.push_back(entry);
    }
    j["profiles"] = profiles;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& metric, std::ostream& out) {
    Graph a = load_graph_file(path_a);
    Graph b = load_graph_file(path_b);
    bool equal;
    if (metric == "ds") {
        equal = degree_sequence(a) == degree_sequence(b);
    } else if (metric == "ndl") {
        equal = a.vertex_count() == b.vertex_count() && nkdl_graph(a, 1) == nkdl_graph(b, 1);
    } else if (metric == "n2dl") {
        equal = a.vertex_count() == b.vertex_count() && nkdl_graph(a, 2) == nkdl_graph(b, 2);
    } else if (metric.rfind("nkdl:", 0) == 0) {
        int k;
        try {
            size_t used = 0;
            k = std::stoi(metric.substr(5), &used);
            if (used != metric.size() - 5 || k < 1)
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw CLI::ValidationError("--metric", "expected nkdl:<positive integer>");
        }
        equal = a.vertex_count() == b.vertex_count() && nkdl_graph(a, k) == nkdl_graph(b, k);
    } else {
        throw CLI::ValidationError("--metric", "expected ds | ndl | n2dl | nkdl:K");
    }
    out << (equal ? "EQUAL" : "UNEQUAL") << "\n";
    return equal ? 0 : 1;
}

int cmd_transform(const std::string& path_a, const std::string& path_b,
                  const std::string& metric, int fallback_bound, std::ostream& out) {
    Graph a = load_graph_file(path_a);
    Graph b = load_graph_file(path_b);
    TransformOptions opts{fallback_bound};
    TransformOutcome outcome =
        metric == "n2dl" ? transform_by_n2dl(a, b, opts) : transform_by_ndl(a, b, opts);
    Json j = to_json(outcome);
    j["metric"] = metric;
    out << j.dump(2) << "\n";
    switch (outcome.status) {
    case TransformStatus::ok: return 0;
    case TransformStatus::not_equivalent: return 1;
    case TransformStatus::diameter_violation: return 2;
    }
    return 0;
}

int cmd_verify(int n_from, std::optional<int> n_to, int jobs, int fallback_bound,
               bool timings, std::ostream& out) {
    int last = n_to.value_or(n_from);
    bool all_passed = true;
    for (int n = n_from; n <= last; ++n) {
        VerifyOptions opts;
        opts.jobs = jobs;
        opts.fallback_bound = fallback_bound;
        VerificationReport report = verify_all(n, opts);
        out << to_json(report, timings).dump() << "\n";
        if (!report.passed())
            all_passed = false;
    }
    return all_passed ? 0 : 1;
}

int cmd_enumerate(int n, std::optional<int> diameter, std::ostream& out) {
    EnumerationStream stream = enumerate_graphs(n);
    for (const Graph& g : stream.graphs) {
        if (diameter && eccentricity_and_diameter(g).diameter != *diameter)
            continue;
        out << write_graph6(g) << "\n";
    }
    return 0;
}

int cmd_anomaly(const std::string& path, int k_max, std::ostream& out) {
    Graph g = load_graph_file(path);
    Json j;
    j["n"] = g.vertex_count();
    j["k_max"] = k_max;
    Json scores = Json::array();
    for (const auto& s : anomaly_scores(g, k_max))
        scores.push_back(to_json(s));
    j["scores"] = scores;
    out << j.dump(2) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"neighborhood degree list toolkit"};
    app.require_subcommand(1);

    std::string path_a, path_b, metric;
    std::optional<int> k_opt, max_n_opt, diameter_opt;
    int k_required = 1, n = 1, jobs = 1;
    int fallback_bound = kDefaultFallbackBound;
    bool timings = false;

    auto* profile = app.add_subcommand("profile", "per-vertex and graph-level N_kDL");
    profile->add_option("file", path_a, "graph file (.g6 or edge list)")->required();
    profile->add_option("--k", k_opt, "single shell index (default: sweep 1..diameter)")
        ->check(CLI::PositiveNumber);

    auto* compare = app.add_subcommand("compare", "compare two graphs under a metric");
    compare->add_option("a", path_a, "first graph")->required();
    compare->add_option("b", path_b, "second graph")->required();
    compare->add_option("--metric", metric, "ds | ndl | n2dl | nkdl:K")->required();

    auto* transform = app.add_subcommand("transform", "switch-sequence certificate");
    transform->add_option("a", path_a, "source graph")->required();
    transform->add_option("b", path_b, "target graph")->required();
    transform->add_option("--metric", metric, "ndl | n2dl")
        ->default_val("ndl")
        ->check(CLI::IsMember({"ndl", "n2dl"}));
    transform->add_option("--fallback-bound", fallback_bound,
                          "max n for the exhaustive fallback");

    auto* verify = app.add_subcommand("verify", "exhaustive verification per n");
    verify->add_option("--n", n, "vertex count (or range start with --max-n)")->required();
    verify->add_option("--max-n", max_n_opt, "verify every size up to this");
    verify->add_option("--jobs", jobs, "worker threads for the transform sweep");
    verify->add_option("--fallback-bound", fallback_bound,
                       "max n for the exhaustive fallback");
    verify->add_flag("--timings", timings, "include elapsed_seconds in the report");

    auto* enumerate = app.add_subcommand("enumerate", "graph6 lines, one class each");
    enumerate->add_option("--n", n, "vertex count")->required();
    enumerate->add_option("--diameter", diameter_opt, "keep only this diameter");

    auto* anomaly = app.add_subcommand("anomaly", "per-vertex role anomaly scores");
    anomaly->add_option("file", path_a, "graph file (.g6 or edge list)")->required();
    anomaly->add_option("--k", k_required, "shell depth k_max")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (profile->parsed())
            return cmd_profile(path_a, k_opt, out);
        if (compare->parsed())
            return cmd_compare(path_a, path_b, metric, out);
        if (transform->parsed())
            return cmd_transform(path_a, path_b, metric, fallback_bound, out);
        if (verify->parsed())
            return cmd_verify(n, max_n_opt, jobs, fallback_bound, timings, out);
        if (enumerate->parsed())
            return cmd_enumerate(n, diameter_opt, out);
        if (anomaly->parsed())
            return cmd_anomaly(path_a, k_required, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

} // namespace ndl
