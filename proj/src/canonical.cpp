#include "ndl/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "ndl/graph6.hpp"

namespace ndl {

namespace {

// The search packs the upper-triangle bits into one word, so the hard
// ceiling is C(11,2) = 55 bits.
constexpr int kCodeWordMaxN = 11;

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<uint16_t> rows;       // adjacency bitmask per vertex
    std::vector<std::vector<int>> blocks; // candidate vertices per position block
    std::vector<int> block_of_pos;
    std::vector<int> chosen;
    std::vector<bool> used;
    int total_bits;
    uint64_t best_code = 0;
    std::vector<int> best_chosen;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        rows.assign(n, 0);
        for (auto [u, v] : g.edges()) {
            rows[u] |= uint16_t(1) << v;
            rows[v] |= uint16_t(1) << u;
        }
        auto colors = refinement_colors(g);
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n; ++v)
            by_color[colors[v]].push_back(v);
        for (auto& [c, verts] : by_color)
            blocks.push_back(verts);
        block_of_pos.reserve(n);
        for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
            for (size_t i = 0; i < blocks[b].size(); ++i)
                block_of_pos.push_back(b);
        chosen.assign(n, -1);
        used.assign(n, false);
        total_bits = n * (n - 1) / 2;
    }

    void dfs(int pos, uint64_t code, int bits) {
        if (pos == n) {
            best_code = code;
            best_chosen = chosen;
            have_best = true;
            return;
        }
        for (int v : blocks[block_of_pos[pos]]) {
            if (used[v])
                continue;
            uint64_t row = 0;
            for (int j = 0; j < pos; ++j)
                row = (row << 1) | ((rows[v] >> chosen[j]) & 1u);
            uint64_t next_code = (code << pos) | row;
            int next_bits = bits + pos;
            if (have_best) {
                // Compare against the prefix of the current best; equal
                // full-length codes bring nothing new.
                uint64_t best_prefix = best_code >> (total_bits - next_bits);
                if (next_code > best_prefix)
                    continue;
                if (next_code == best_prefix && pos == n - 1)
                    continue;
            }
            chosen[pos] = v;
            used[v] = true;
            dfs(pos + 1, next_code, next_bits);
            used[v] = false;
            chosen[pos] = -1;
        }
    }
};

int effective_bound(int max_n) {
    return std::min(max_n, kCodeWordMaxN);
}

} // namespace

std::vector<int> refinement_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> colors(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nbr;
            nbr.reserve(g.neighbors(v).size());
            for (int u : g.neighbors(v))
                nbr.push_back(colors[u]);
            std::sort(nbr.begin(), nbr.end());
            sigs[v] = {colors[v], std::move(nbr)};
        }
        auto sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
        if (next == colors)
            break;
        colors = std::move(next);
    }
    return colors;
}

CanonicalLabeling canonical_labeling(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > effective_bound(max_n))
        throw Error(ErrorCode::size_limit,
                    "canonicalization limited to n <= " + std::to_string(effective_bound(max_n)));
    if (n <= 1) {
        auto id = VertexBijection::identity(n);
        return {write_graph6(g), id};
    }
    CanonSearch search(g);
    search.dfs(0, 0, 0);
    std::vector<int> perm(n);
    for (int pos = 0; pos < n; ++pos)
        perm[search.best_chosen[pos]] = pos;
    VertexBijection pi(std::move(perm));
    const auto& order = search.best_chosen;
    std::string form = detail::encode_graph6(
        n, [&](int i, int j) { return g.adjacent(order[i], order[j]); });
    return {std::move(form), std::move(pi)};
}

std::string canonical_form(const Graph& g, int max_n) {
    return canonical_labeling(g, max_n).form;
}

namespace {

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& colors_g;
    const std::vector<int>& colors_h;
    std::vector<int> order;   // g-vertices, most constrained first
    std::vector<int> mapping; // g-vertex -> h-vertex or -1
    std::vector<bool> used;

    bool extend(int step) {
        int n = g.vertex_count();
        if (step == n)
            return true;
        int v = order[step];
        for (int hv = 0; hv < n; ++hv) {
            if (used[hv] || colors_h[hv] != colors_g[v])
                continue;
            bool ok = true;
            for (int t = 0; t < step; ++t) {
                int u = order[t];
                if (g.adjacent(v, u) != h.adjacent(hv, mapping[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            mapping[v] = hv;
            used[hv] = true;
            if (extend(step + 1))
                return true;
            used[hv] = false;
            mapping[v] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<VertexBijection> find_isomorphism(const Graph& g, const Graph& h, int max_n) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    int n = g.vertex_count();
    if (n > max_n)
        throw Error(ErrorCode::size_limit,
                    "isomorphism search limited to n <= " + std::to_string(max_n));
    if (n == 0)
        return VertexBijection::identity(0);

    auto colors_g = refinement_colors(g);
    auto colors_h = refinement_colors(h);
    {
        auto cg = colors_g;
        auto ch = colors_h;
        std::sort(cg.begin(), cg.end());
        std::sort(ch.begin(), ch.end());
        if (cg != ch)
            return std::nullopt;
    }

    std::vector<int> class_size(n, 0);
    for (int c : colors_g)
        ++class_size[c];
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ka = std::tuple(class_size[colors_g[a]], colors_g[a], a);
        auto kb = std::tuple(class_size[colors_g[b]], colors_g[b], b);
        return ka < kb;
    });

    IsoSearch search{g, h, colors_g, colors_h, order,
                     std::vector<int>(n, -1), std::vector<bool>(n, false)};
    if (!search.extend(0))
        return std::nullopt;
    return VertexBijection(search.mapping);
}

} // namespace ndl
