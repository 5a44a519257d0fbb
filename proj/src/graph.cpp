#include "ndl/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ndl {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0)
        throw Error(ErrorCode::out_of_range, "vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::out_of_range,
                        "edge endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw Error(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v))
        throw Error(ErrorCode::out_of_range, "vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = neighbors(u);
    if (!has_vertex(v))
        throw Error(ErrorCode::out_of_range, "vertex " + std::to_string(v) + " out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexBijection::VertexBijection(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (int img : mapping_) {
        if (img < 0 || img >= static_cast<int>(mapping_.size()) || seen[img])
            throw Error(ErrorCode::out_of_range, "mapping is not a permutation");
        seen[img] = true;
    }
}

VertexBijection VertexBijection::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return VertexBijection(std::move(m));
}

VertexBijection VertexBijection::inverse() const {
    std::vector<int> inv(mapping_.size());
    for (int v = 0; v < static_cast<int>(mapping_.size()); ++v)
        inv[mapping_[v]] = v;
    return VertexBijection(std::move(inv));
}

VertexBijection VertexBijection::then(const VertexBijection& next) const {
    std::vector<int> m(mapping_.size());
    for (int v = 0; v < static_cast<int>(mapping_.size()); ++v)
        m[v] = next.apply(mapping_[v]);
    return VertexBijection(std::move(m));
}

DistanceVector bfs_distances(const Graph& g, int v) {
    if (!g.has_vertex(v))
        throw Error(ErrorCode::out_of_range, "bfs source out of range");
    DistanceVector out;
    out.source = v;
    out.dist.assign(g.vertex_count(), kUnreachable);
    out.dist[v] = 0;
    std::deque<int> queue{v};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (out.dist[w] == kUnreachable) {
                out.dist[w] = out.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return out;
}

std::vector<int> neighborhood_k(const Graph& g, int v, int k) {
    if (k < 1)
        throw Error(ErrorCode::out_of_range, "k must be >= 1");
    auto d = bfs_distances(g, v);
    std::vector<int> shell;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (d.dist[u] == k)
            shell.push_back(u);
    return shell;
}

EccentricityInfo eccentricity_and_diameter(const Graph& g) {
    EccentricityInfo info;
    int n = g.vertex_count();
    info.eccentricity.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        auto d = bfs_distances(g, v);
        int ecc = 0;
        for (int u = 0; u < n; ++u) {
            if (d.dist[u] == kUnreachable) {
                info.connected = false;
                ecc = kInfinite;
                break;
            }
            ecc = std::max(ecc, d.dist[u]);
        }
        info.eccentricity[v] = ecc;
    }
    if (!info.connected) {
        std::fill(info.eccentricity.begin(), info.eccentricity.end(), kInfinite);
        info.diameter = kInfinite;
    } else {
        info.diameter = 0;
        for (int e : info.eccentricity)
            info.diameter = std::max(info.diameter, e);
    }
    return info;
}

Graph delete_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v))
        throw Error(ErrorCode::out_of_range, "delete_vertex out of range");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v)
            continue;
        edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph::build(g.vertex_count() - 1, edges);
}

Graph relabel(const Graph& g, const VertexBijection& pi) {
    if (pi.size() != g.vertex_count())
        throw Error(ErrorCode::out_of_range, "bijection size does not match graph");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        edges.emplace_back(pi.apply(u), pi.apply(v));
    return Graph::build(g.vertex_count(), edges);
}

} // namespace ndl
