#ifndef NDL_TEST_HELPERS_HPP
#define NDL_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ndl/graph.hpp"
#include "ndl/switches.hpp"

namespace ndl::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(NDL_FIXTURE_DIR) + "/" + name;
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::build(n, e);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph::build(leaves + 1, e);
}

// 3-cube labeled so that the switch (3,0,7,4) yields mobius_ladder().
inline Graph cube_graph() {
    return Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7},
                            {0, 3}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// 8-cycle plus the four long chords {i, i+4}.
inline Graph mobius_ladder() {
    return Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7},
                            {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// the frozen 8-vertex diameter-2 profile fixture (fixtures/fig4.el)
inline Graph fig4_graph() {
    return Graph::build(8, {{0, 1}, {0, 3}, {0, 5}, {0, 7}, {1, 2}, {1, 5}, {1, 6}, {1, 7},
                            {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 6}, {3, 7}, {4, 5}, {6, 7}});
}

inline Graph two_triangles() {
    return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                e.emplace_back(i, j);
    return Graph::build(n, e);
}

inline VertexBijection random_permutation(std::mt19937& rng, int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i)
        m[i] = i;
    std::shuffle(m.begin(), m.end(), rng);
    return VertexBijection(m);
}

// Independent distance oracle: shortest simple path by exhaustive DFS.
inline int brute_force_distance(const Graph& g, int from, int to) {
    if (from == to)
        return 0;
    int best = -1;
    std::vector<bool> visited(g.vertex_count(), false);
    visited[from] = true;
    auto dfs = [&](auto&& self, int at, int len) -> void {
        if (best != -1 && len >= best)
            return;
        for (int u : g.neighbors(at)) {
            if (u == to) {
                if (best == -1 || len + 1 < best)
                    best = len + 1;
                continue;
            }
            if (!visited[u]) {
                visited[u] = true;
                self(self, u, len + 1);
                visited[u] = false;
            }
        }
    };
    dfs(dfs, from, 0);
    return best;
}

// First-principles switch validity: the six stated conditions, nothing
// shared with classify_switch.
inline bool switch_conditions_hold(const Graph& g, int v1, int v2, int w1, int w2) {
    std::set<int> distinct{v1, v2, w1, w2};
    if (distinct.size() != 4)
        return false;
    auto has = [&](int a, int b) {
        for (auto [x, y] : g.edges())
            if ((x == a && y == b) || (x == b && y == a))
                return true;
        return false;
    };
    return has(v1, v2) && has(w1, w2) && !has(v1, w2) && !has(v2, w1);
}

// Independent enumeration oracle: all ordered 4-tuples, deduplicated by
// the tuple symmetry.
inline std::vector<std::tuple<int, int, int, int>>
brute_force_switches(const Graph& g, bool restricted) {
    std::set<std::tuple<int, int, int, int>> seen;
    int n = g.vertex_count();
    for (int v1 = 0; v1 < n; ++v1)
        for (int v2 = 0; v2 < n; ++v2)
            for (int w1 = 0; w1 < n; ++w1)
                for (int w2 = 0; w2 < n; ++w2) {
                    if (!switch_conditions_hold(g, v1, v2, w1, w2))
                        continue;
                    if (restricted && !(g.degree(v1) == g.degree(w1) &&
                                        g.degree(v2) == g.degree(w2)))
                        continue;
                    seen.insert(std::min({std::tuple{v1, v2, w1, w2},
                                          std::tuple{w1, w2, v1, v2},
                                          std::tuple{v2, v1, w2, w1},
                                          std::tuple{w2, w1, v2, v1}}));
                }
    return {seen.begin(), seen.end()};
}

} // namespace ndl::test

#endif
