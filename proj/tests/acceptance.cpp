// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any gating criterion fails. Set NDL_ACCEPT_EXTENDED=1 to add the
// non-gating n=7 partition runs.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "ndl/anomaly.hpp"
#include "ndl/canonical.hpp"
#include "ndl/cli.hpp"
#include "ndl/edgelist.hpp"
#include "ndl/graph6.hpp"
#include "ndl/oracle.hpp"
#include "ndl/profiles.hpp"
#include "ndl/transform.hpp"

using namespace ndl;
using namespace ndl::test;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty())
            detail += "; ";
        detail += why;
    }
};

int checked = 0, failed = 0;

void report(int number, const std::string& name, const Outcome& o, bool gating = true) {
    ++checked;
    if (!o.pass && gating)
        ++failed;
    std::ostringstream line;
    line << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name
         << " (" << o.seconds << "s)";
    if (!o.detail.empty())
        line << " — " << o.detail;
    if (!gating)
        line << " [extended, non-gating]";
    std::cout << line.str() << "\n";
}

template <typename F>
Outcome timed(F&& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return o;
}

nlohmann::json run_cli_json(const std::vector<std::string>& args, Outcome& o) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (code != 0)
        o.fail("cli exited " + std::to_string(code) + ": " + err.str());
    return nlohmann::json::parse(out.str());
}

// ---------------------------------------------------------------- 1
Outcome criterion_profile_rows() {
    return timed([&](Outcome& o) {
        const std::vector<std::vector<int>> ndl_rows = {
            {5, 5, 4, 3}, {4, 4, 4, 4, 3}, {5, 5, 4, 3}, {4, 4, 4, 4, 3},
            {5, 4, 3},    {5, 4, 3},       {5, 5, 4, 4}, {5, 5, 4, 4}};
        const std::vector<std::vector<int>> n2dl_rows = {
            {4, 4, 3}, {5, 3},       {4, 4, 3}, {5, 3},
            {5, 4, 4, 4}, {5, 4, 4, 4}, {4, 3, 3}, {4, 3, 3}};

        auto k1 = run_cli_json({"profile", fixture_path("fig4.el"), "--k", "1"}, o);
        auto k2 = run_cli_json({"profile", fixture_path("fig4.el"), "--k", "2"}, o);
        if (k1["degree_sequence"] != nlohmann::json({5, 5, 4, 4, 4, 4, 3, 3}))
            o.fail("degree sequence mismatch");
        for (int v = 0; v < 8; ++v) {
            if (k1["profiles"][0]["per_vertex"][v] != nlohmann::json(ndl_rows[v]))
                o.fail("NDL row mismatch at vertex " + std::to_string(v));
            if (k2["profiles"][0]["per_vertex"][v] != nlohmann::json(n2dl_rows[v]))
                o.fail("N2DL row mismatch at vertex " + std::to_string(v));
        }
        if (o.seconds > 1.0)
            o.fail("exceeded 1s");
    });
}

// ---------------------------------------------------------------- 2
Outcome criterion_cube_mobius() {
    return timed([&](Outcome& o) {
        Graph cube = parse_graph6("Gl`HGs");
        Graph mobius = parse_graph6("GhdHKc");
        if (!(nkdl_graph(cube, 1) == nkdl_graph(mobius, 1)))
            o.fail("NDL profiles differ");
        if (nkdl_graph(cube, 2) == nkdl_graph(mobius, 2))
            o.fail("2-shell profiles should differ");
        if (eccentricity_and_diameter(cube).diameter != 3)
            o.fail("cube diameter is not 3");
        if (eccentricity_and_diameter(mobius).diameter != 2)
            o.fail("mobius ladder diameter is not 2");

        TwoSwitch s{3, 0, 7, 4};
        if (classify_switch(cube, s) != SwitchClass::degree_restricted)
            o.fail("fixture switch is not degree-restricted");
        Graph switched = apply_switch(cube, s);
        if (!find_isomorphism(switched, mobius).has_value())
            o.fail("one switch does not reach the mobius ladder");
        auto direct = fallback_search(cube, mobius);
        if (!direct.reachable || direct.seq.size() != 1)
            o.fail("shortest certificate is not a single switch");
        if (o.seconds > 1.0)
            o.fail("exceeded 1s");
    });
}

// ---------------------------------------------------------------- 3
Outcome criterion_shell2_identity() {
    return timed([&](Outcome& o) {
        long violations = 0, graphs = 0;
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : enumerate_graphs(n).graphs) {
                if (eccentricity_and_diameter(g).diameter != 2)
                    continue;
                ++graphs;
                for (int v = 0; v < n; ++v)
                    if (g.degree(v) !=
                        n - 1 - static_cast<int>(neighborhood_k(g, v, 2).size()))
                        ++violations;
            }
        }
        o.detail = std::to_string(graphs) + " diameter-2 classes checked";
        if (violations != 0)
            o.fail(std::to_string(violations) + " violations");
        if (o.seconds > 300.0)
            o.fail("exceeded 5 minutes");
    });
}

// ------------------------------------------------------------- 4/5/6
Outcome criterion_ndl_partition(const std::map<int, VerificationReport>& reports, int max_n) {
    return timed([&](Outcome& o) {
        for (const auto& [n, report] : reports) {
            if (n > max_n)
                continue;
            for (const auto& m : report.mismatches)
                if (m.kind == "ndl_partition")
                    o.fail("n=" + std::to_string(n) + ": " + m.graph_a + " vs " + m.graph_b);
        }
        if (o.seconds > 600.0)
            o.fail("exceeded 10 minutes");
    });
}

Outcome criterion_n2dl_partition(const std::map<int, VerificationReport>& reports, int max_n) {
    return timed([&](Outcome& o) {
        for (const auto& [n, report] : reports) {
            if (n > max_n)
                continue;
            for (const auto& m : report.mismatches) {
                if (m.kind == "n2dl_partition")
                    o.fail("n=" + std::to_string(n) + " partition: " + m.graph_a + " vs " +
                           m.graph_b);
                if (m.kind == "n2dl_ndl_coincidence")
                    o.fail("n=" + std::to_string(n) + " coincidence: " + m.graph_a + " vs " +
                           m.graph_b);
            }
        }
    });
}

Outcome criterion_constructive(const std::map<int, VerificationReport>& reports, int max_n) {
    return timed([&](Outcome& o) {
        int pairs = 0;
        double worst_gap = 0.0, worst_fb = 0.0;
        for (const auto& [n, report] : reports) {
            if (n > max_n)
                continue;
            for (const auto& m : report.mismatches)
                if (m.kind.rfind("transform_", 0) == 0)
                    o.fail("n=" + std::to_string(n) + ": " + m.detail);
            pairs += report.transform_pairs_checked;
            worst_gap = std::max(worst_gap, report.proofgap_rate);
            worst_fb = std::max(worst_fb, report.fallback_rate);
        }
        std::ostringstream note;
        note << pairs << " same-NDL pairs certified; proof-gap rate up to " << worst_gap
             << ", fallback rate up to " << worst_fb << " (reported, no target)";
        o.detail = note.str();
    });
}

// ---------------------------------------------------------------- 7
Outcome criterion_properties() {
    return timed([&](Outcome& o) {
        std::mt19937 rng(20240818);

        int done = 0;
        while (done < 1000) { // restricted switches keep every per-vertex NDL
            Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.45);
            auto all = enumerate_switches(g, true);
            if (all.empty())
                continue;
            Graph next = apply_switch(g, all[rng() % all.size()]);
            if (!(labeled_profile(next, 1) == labeled_profile(g, 1))) {
                o.fail("restricted switch changed a per-vertex NDL");
                return;
            }
            ++done;
        }

        done = 0;
        while (done < 1000) { // plain switches keep the degree sequence
            Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.45);
            auto all = enumerate_switches(g, false);
            if (all.empty())
                continue;
            Graph next = apply_switch(g, all[rng() % all.size()]);
            if (!(degree_sequence(next) == degree_sequence(g))) {
                o.fail("plain switch changed the degree sequence");
                return;
            }
            ++done;
        }

        done = 0;
        while (done < 1000) { // apply then inverse is the identity
            Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.45);
            auto all = enumerate_switches(g, false);
            if (all.empty())
                continue;
            const auto& s = all[rng() % all.size()];
            if (!(apply_switch(apply_switch(g, s), inverse_switch(s)) == g)) {
                o.fail("inverse switch failed to undo");
                return;
            }
            ++done;
        }

        for (int trial = 0; trial < 1000; ++trial) { // graph6 round trip
            Graph g = random_graph(rng, static_cast<int>(rng() % 63), 0.3);
            if (!(parse_graph6(write_graph6(g)) == g)) {
                o.fail("graph6 round trip changed the graph");
                return;
            }
        }

        auto random_list = [&]() {
            std::vector<int> v(rng() % 6);
            for (int& x : v)
                x = static_cast<int>(rng() % 5);
            return DegreeList::from_unsorted(std::move(v));
        };
        for (int trial = 0; trial < 1000; ++trial) { // total order laws
            DegreeList a = random_list(), b = random_list(), c = random_list();
            auto ab = lex_compare(a, b), ba = lex_compare(b, a);
            bool anti = (ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater);
            bool refl = (ab == std::strong_ordering::equal) == (a == b);
            bool trans = true;
            if (ab != std::strong_ordering::greater &&
                lex_compare(b, c) != std::strong_ordering::greater)
                trans = lex_compare(a, c) != std::strong_ordering::greater;
            if (!anti || !refl || !trans) {
                o.fail("lexicographic order law violated");
                return;
            }
        }

        for (int trial = 0; trial < 1000; ++trial) { // anomaly relabel invariance
            Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 7), 0.45);
            auto pi = random_permutation(rng, g.vertex_count());
            std::map<int, double> base, moved;
            for (const auto& s : anomaly_scores(g, 2))
                base[pi.apply(s.vertex)] = s.score;
            for (const auto& s : anomaly_scores(relabel(g, pi), 2))
                moved[s.vertex] = s.score;
            if (base != moved) {
                o.fail("anomaly scores changed under relabeling");
                return;
            }
        }
        o.detail = "6 properties x 1000 trials";
    });
}

// ---------------------------------------------------------------- 8
Outcome criterion_negative_controls() {
    return timed([&](Outcome& o) {
        // equal degree sequences, unequal NDL
        Graph a = load_graph_file(fixture_path("k3_plus_k2.el"));
        Graph b = load_graph_file(fixture_path("p5.el"));
        if (!(degree_sequence(a) == degree_sequence(b)))
            o.fail("control pair degree sequences differ");
        if (nkdl_graph(a, 1) == nkdl_graph(b, 1))
            o.fail("control pair NDL unexpectedly equal");
        std::ostringstream out, err;
        int code = run_cli({"compare", fixture_path("k3_plus_k2.el"), fixture_path("p5.el"),
                            "--metric", "ndl"},
                           out, err);
        if (code != 1 || out.str() != "UNEQUAL\n")
            o.fail("compare did not report UNEQUAL");
        if (transform_by_ndl(a, b).status != TransformStatus::not_equivalent)
            o.fail("transform did not refuse the pair");

        Graph cube = parse_graph6("Gl`HGs");
        if (transform_by_n2dl(cube, cube).status != TransformStatus::diameter_violation)
            o.fail("diameter gate did not trigger");
    });
}

} // namespace

int main() {
    bool extended = std::getenv("NDL_ACCEPT_EXTENDED") != nullptr;
    int partition_max_n = extended ? 7 : 6;

    report(1, "fig4 fixture per-vertex profiles via the cli", criterion_profile_rows());
    report(2, "cube / mobius-ladder profile and switch facts", criterion_cube_mobius());
    report(3, "shell-2 degree identity, exhaustive n<=7", criterion_shell2_identity());

    // shared exhaustive verification runs for criteria 4-6
    std::map<int, VerificationReport> reports;
    auto t0 = Clock::now();
    for (int n = 1; n <= partition_max_n; ++n)
        reports.emplace(n, verify_all(n));
    double verify_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "  (exhaustive verification n<=" << partition_max_n << " took "
              << verify_seconds << "s)\n";

    report(4, "NDL partition equals restricted-switch reachability, n<=6",
           criterion_ndl_partition(reports, 6));
    report(5, "2-shell partition matches reachability on diameter-2 graphs, n<=6",
           criterion_n2dl_partition(reports, 6));
    report(6, "constructive certificates for every same-NDL pair, n<=6",
           criterion_constructive(reports, 6));
    if (extended) {
        report(4, "NDL partition equals reachability, n=7",
               criterion_ndl_partition(reports, 7), false);
        report(5, "2-shell partition matches reachability, n=7",
               criterion_n2dl_partition(reports, 7), false);
        report(6, "constructive certificates, n=7",
               criterion_constructive(reports, 7), false);
    }

    report(7, "randomized property suite, 1000 trials each", criterion_properties());
    report(8, "negative controls", criterion_negative_controls());

    std::cout << (failed == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << checked - failed << "/" << checked << ")\n";
    return failed == 0 ? 0 : 1;
}
