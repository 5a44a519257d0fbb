#include "ndl/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

#include "ndl/canonical.hpp"
#include "ndl/graph6.hpp"
#include "ndl/switches.hpp"

namespace ndl {

EnumerationStream enumerate_graphs(int n, int cap) {
    if (n < 0)
        throw Error(ErrorCode::out_of_range, "vertex count must be non-negative");
    if (n > cap)
        throw Error(ErrorCode::size_limit,
                    "enumeration capped at n <= " + std::to_string(cap));

    std::vector<Graph> level{Graph::build(0, {})};
    for (int k = 1; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& g : level) {
            auto base = g.edges();
            for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
                auto edges = base;
                for (int b = 0; b < k - 1; ++b)
                    if (mask >> b & 1u)
                        edges.emplace_back(b, k - 1);
                Graph cand = Graph::build(k, edges);
                auto canon = canonical_labeling(cand);
                next.try_emplace(canon.form, relabel(cand, canon.to_canonical));
            }
        }
        level.clear();
        level.reserve(next.size());
        for (auto& [form, g] : next)
            level.push_back(std::move(g));
    }
    return {n, std::move(level)};
}

std::map<ProfileSet, std::vector<int>> partition_by_profile(
    const EnumerationStream& stream, int k, std::optional<int> diameter_filter) {
    std::map<ProfileSet, std::vector<int>> classes;
    for (size_t i = 0; i < stream.graphs.size(); ++i) {
        const Graph& g = stream.graphs[i];
        if (diameter_filter) {
            auto info = eccentricity_and_diameter(g);
            if (info.diameter != *diameter_filter)
                continue;
        }
        classes[nkdl_graph(g, k)].push_back(static_cast<int>(i));
    }
    return classes;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> dense_component_ids(Dsu& dsu, int n) {
    std::vector<int> ids(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int root = dsu.find(i);
        if (ids[root] == -1)
            ids[root] = next++;
        ids[i] = ids[root];
    }
    return ids;
}

} // namespace

std::vector<int> reachability_components(const EnumerationStream& stream, bool restricted,
                                         const MetaEdgeFilter& meta_edge_filter) {
    int count = static_cast<int>(stream.graphs.size());
    std::map<std::string, int> index;
    std::vector<std::string> forms(count);
    for (int i = 0; i < count; ++i) {
        forms[i] = canonical_form(stream.graphs[i]);
        index[forms[i]] = i;
    }

    Dsu dsu(count);
    for (int i = 0; i < count; ++i) {
        const Graph& rep = stream.graphs[i];
        for (const auto& s : enumerate_switches(rep, restricted)) {
            std::string target = canonical_form(apply_switch(rep, s));
            auto it = index.find(target);
            // switches landing outside the node set are not meta-edges;
            // a full enumeration stream is closed under switches
            if (it == index.end())
                continue;
            if (meta_edge_filter && !meta_edge_filter(forms[i], target))
                continue;
            dsu.unite(i, it->second);
        }
    }
    return dense_component_ids(dsu, count);
}

namespace {

std::vector<int> class_sizes_desc(const std::vector<int>& class_ids) {
    std::map<int, int> sizes;
    for (int c : class_ids)
        if (c >= 0)
            ++sizes[c];
    std::vector<int> out;
    out.reserve(sizes.size());
    for (auto& [c, s] : sizes)
        out.push_back(s);
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

// Verifies that two class-id labelings over the same index subset induce
// the same partition; emits one witness pair per direction of failure.
void check_partitions_agree(const std::vector<int>& indices,
                            const std::vector<int>& class_a,
                            const std::vector<int>& class_b,
                            const std::vector<std::string>& forms,
                            const std::string& kind,
                            std::vector<MismatchWitness>& out) {
    for (int pass = 0; pass < 2; ++pass) {
        const auto& from = pass == 0 ? class_a : class_b;
        const auto& to = pass == 0 ? class_b : class_a;
        std::map<int, std::pair<int, int>> rep; // from-class -> (index, to-class)
        for (int i : indices) {
            auto [it, fresh] = rep.try_emplace(from[i], std::pair{i, to[i]});
            if (!fresh && it->second.second != to[i]) {
                out.push_back({kind, forms[it->second.first], forms[i],
                               pass == 0 ? "same profile class, different component"
                                         : "same component, different profile class"});
                break;
            }
        }
    }
}

struct TransformClassStats {
    int pairs = 0;
    int calls_with_gaps = 0;
    int calls_with_fallback = 0;
    std::vector<MismatchWitness> mismatches;
};

TransformClassStats check_transform_class(const EnumerationStream& stream,
                                          const std::vector<int>& members,
                                          const std::vector<std::string>& forms,
                                          const VerifyOptions& opts) {
    TransformClassStats stats;
    for (size_t a = 0; a < members.size(); ++a) {
        for (size_t b = a + 1; b < members.size(); ++b) {
            int i = members[a], j = members[b];
            ++stats.pairs;
            try {
                auto outcome = transform_by_ndl(stream.graphs[i], stream.graphs[j],
                                                {opts.fallback_bound});
                if (outcome.status != TransformStatus::ok) {
                    stats.mismatches.push_back({"transform_completeness", forms[i], forms[j],
                                                "same NDL but no certificate found"});
                    continue;
                }
                const auto& res = *outcome.result;
                // independent re-verification of the certificate
                Graph g_fin = replay(stream.graphs[i], res.seq_g);
                Graph h_fin = replay(stream.graphs[j], res.seq_h);
                if (!(relabel(g_fin, res.bijection) == h_fin)) {
                    stats.mismatches.push_back({"transform_soundness", forms[i], forms[j],
                                                "certificate endpoints differ"});
                    continue;
                }
                if (!res.telemetry.gap_events.empty())
                    ++stats.calls_with_gaps;
                if (res.telemetry.fallback_invocations > 0)
                    ++stats.calls_with_fallback;
            } catch (const Error& e) {
                stats.mismatches.push_back(
                    {"transform_soundness", forms[i], forms[j], e.what()});
            }
        }
    }
    return stats;
}

} // namespace

VerificationReport verify_all(int n, const VerifyOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n = n;

    EnumerationStream stream = enumerate_graphs(n, opts.enumeration_cap);
    int count = static_cast<int>(stream.graphs.size());
    report.graphs_total = count;

    std::vector<std::string> forms(count);
    std::vector<int> diameter(count);
    for (int i = 0; i < count; ++i) {
        forms[i] = write_graph6(stream.graphs[i]);
        diameter[i] = eccentricity_and_diameter(stream.graphs[i]).diameter;
    }

    std::vector<int> all_indices(count);
    std::iota(all_indices.begin(), all_indices.end(), 0);
    std::vector<int> diam2_indices;
    for (int i = 0; i < count; ++i)
        if (diameter[i] == 2)
            diam2_indices.push_back(i);
    report.diameter2_graphs = static_cast<int>(diam2_indices.size());

    // (a) shell-2 degree identity on every diameter-2 graph
    for (int i : diam2_indices) {
        const Graph& g = stream.graphs[i];
        for (int v = 0; v < g.vertex_count(); ++v) {
            int shell2 = static_cast<int>(neighborhood_k(g, v, 2).size());
            if (g.degree(v) != n - 1 - shell2)
                report.shell2_violations.push_back({forms[i], v, g.degree(v), shell2});
        }
    }

    // class ids per graph for both profiles and reachability
    auto ndl_partition = partition_by_profile(stream, 1);
    auto n2dl_partition = partition_by_profile(stream, 2);
    std::vector<int> ndl_class(count, -1), n2dl_class(count, -1);
    {
        int cid = 0;
        for (auto& [profile, members] : ndl_partition) {
            for (int i : members)
                ndl_class[i] = cid;
            ++cid;
        }
        cid = 0;
        for (auto& [profile, members] : n2dl_partition) {
            for (int i : members)
                n2dl_class[i] = cid;
            ++cid;
        }
    }
    std::vector<int> component =
        reachability_components(stream, true, opts.meta_edge_filter);

    report.partition_by_ndl = class_sizes_desc(ndl_class);
    report.reachability_components_sizes = class_sizes_desc(component);
    {
        std::vector<int> diam2_n2dl(count, -1);
        for (int i : diam2_indices)
            diam2_n2dl[i] = n2dl_class[i];
        report.partition_by_n2dl = class_sizes_desc(diam2_n2dl);
    }

    // (b) NDL partition == restricted reachability partition, all graphs
    check_partitions_agree(all_indices, ndl_class, component, forms,
                           "ndl_partition", report.mismatches);

    // (c) 2-shell partition == reachability partition on diameter-2 graphs
    check_partitions_agree(diam2_indices, n2dl_class, component, forms,
                           "n2dl_partition", report.mismatches);

    // diameter-2 graphs: equal 2-shell profile iff equal NDL
    check_partitions_agree(diam2_indices, n2dl_class, ndl_class, forms,
                           "n2dl_ndl_coincidence", report.mismatches);

    // (d) constructive certificates for every same-NDL pair, sharded by class
    {
        std::vector<const std::vector<int>*> classes;
        for (auto& [profile, members] : ndl_partition)
            if (members.size() > 1)
                classes.push_back(&members);

        std::vector<TransformClassStats> stats(classes.size());
        int jobs = std::max(1, opts.jobs);
        if (jobs == 1) {
            for (size_t t = 0; t < classes.size(); ++t)
                stats[t] = check_transform_class(stream, *classes[t], forms, opts);
        } else {
            std::vector<std::thread> workers;
            workers.reserve(jobs);
            for (int worker = 0; worker < jobs; ++worker) {
                workers.emplace_back([&, worker] {
                    for (size_t t = worker; t < classes.size(); t += jobs)
                        stats[t] = check_transform_class(stream, *classes[t], forms, opts);
                });
            }
            for (auto& th : workers)
                th.join();
        }

        int gap_calls = 0, fallback_calls = 0;
        for (const auto& s : stats) {
            report.transform_pairs_checked += s.pairs;
            gap_calls += s.calls_with_gaps;
            fallback_calls += s.calls_with_fallback;
            report.mismatches.insert(report.mismatches.end(), s.mismatches.begin(),
                                     s.mismatches.end());
        }
        if (report.transform_pairs_checked > 0) {
            report.proofgap_rate =
                double(gap_calls) / double(report.transform_pairs_checked);
            report.fallback_rate =
                double(fallback_calls) / double(report.transform_pairs_checked);
        }
    }

    // observed behavior of mixed-diameter pairs (reported, not asserted)
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if ((diameter[i] == 2) == (diameter[j] == 2))
                continue;
            if (n2dl_class[i] == n2dl_class[j]) {
                ++report.mixed_pairs_equal_n2dl;
                if (component[i] == component[j])
                    ++report.mixed_pairs_equal_n2dl_reachable;
            }
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace ndl
