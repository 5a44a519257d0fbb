#ifndef NDL_GRAPH_HPP
#define NDL_GRAPH_HPP

#include <utility>
#include <vector>

#include "ndl/error.hpp"

namespace ndl {

// Distance value for vertices in another component.
inline constexpr int kUnreachable = -1;
// Diameter / eccentricity value for disconnected graphs.
inline constexpr int kInfinite = -1;

// Simple undirected graph on vertices 0..n-1. Immutable after
// construction; every mutating operation returns a new graph.
// Edges are stored once as ordered pairs (u < v) plus per-vertex
// sorted neighbor lists.
class Graph {
public:
    Graph() = default;

    // Validates and deduplicates `edge_list`. Rejects self-loops and
    // endpoints outside 0..n-1.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    // Labeled identity (same n, same edge set).
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct DistanceVector {
    int source = 0;
    std::vector<int> dist; // kUnreachable for other components
};

// Permutation of 0..n-1.
class VertexBijection {
public:
    VertexBijection() = default;
    explicit VertexBijection(std::vector<int> mapping);

    static VertexBijection identity(int n);

    int apply(int v) const { return mapping_.at(v); }
    int size() const { return static_cast<int>(mapping_.size()); }
    const std::vector<int>& mapping() const { return mapping_; }

    VertexBijection inverse() const;
    // apply `*this` first, then `next`.
    VertexBijection then(const VertexBijection& next) const;

    friend bool operator==(const VertexBijection&, const VertexBijection&) = default;

private:
    std::vector<int> mapping_;
};

struct EccentricityInfo {
    std::vector<int> eccentricity; // kInfinite per vertex when disconnected
    int diameter = 0;              // kInfinite when disconnected
    bool connected = true;
};

DistanceVector bfs_distances(const Graph& g, int v);

// Vertices at distance exactly k from v (k >= 1); never contains v.
std::vector<int> neighborhood_k(const Graph& g, int v, int k);

EccentricityInfo eccentricity_and_diameter(const Graph& g);

// Removes v and its edges; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, int v);

// Image of g under pi: edge {u,v} -> {pi(u), pi(v)}.
Graph relabel(const Graph& g, const VertexBijection& pi);

} // namespace ndl

#endif
