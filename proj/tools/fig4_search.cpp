// Reconstructs the bundled 8-vertex diameter-2 fixture (fixtures/fig4.el)
// from its frozen per-vertex constraints: degrees, the neighborhood of
// vertex 0, and every NDL / N_2DL row. Enumerates all labeled graphs
// consistent with the constraints and reports them together with the
// count of isomorphism classes; the fixture freezes the first solution.

#include <array>
#include <iostream>
#include <set>
#include <vector>

#include "ndl/canonical.hpp"
#include "ndl/graph.hpp"
#include "ndl/profiles.hpp"

using namespace ndl;

namespace {

constexpr std::array<int, 8> kDegrees = {4, 5, 4, 5, 3, 3, 4, 4};
constexpr std::array<int, 4> kNeighborsOfV0 = {1, 3, 5, 7};

const std::vector<std::vector<int>> kNdlRows = {
    {5, 5, 4, 3}, {4, 4, 4, 4, 3}, {5, 5, 4, 3}, {4, 4, 4, 4, 3},
    {5, 4, 3},    {5, 4, 3},       {5, 5, 4, 4}, {5, 5, 4, 4},
};
const std::vector<std::vector<int>> kN2dlRows = {
    {4, 4, 3}, {5, 3},       {4, 4, 3}, {5, 3},
    {5, 4, 4, 4}, {5, 4, 4, 4}, {4, 3, 3}, {4, 3, 3},
};

} // namespace

int main() {
    std::vector<std::pair<int, int>> unknown;
    for (int i = 1; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            unknown.emplace_back(i, j);

    std::vector<std::pair<int, int>> fixed;
    for (int v : kNeighborsOfV0)
        fixed.emplace_back(0, v);

    std::vector<std::vector<std::pair<int, int>>> solutions;
    for (unsigned mask = 0; mask < (1u << unknown.size()); ++mask) {
        std::array<int, 8> deg{};
        for (int v : kNeighborsOfV0) {
            ++deg[0];
            ++deg[v];
        }
        for (size_t b = 0; b < unknown.size(); ++b) {
            if (mask >> b & 1u) {
                ++deg[unknown[b].first];
                ++deg[unknown[b].second];
            }
        }
        if (deg != kDegrees)
            continue;

        auto edges = fixed;
        for (size_t b = 0; b < unknown.size(); ++b)
            if (mask >> b & 1u)
                edges.push_back(unknown[b]);
        Graph g = Graph::build(8, edges);

        if (eccentricity_and_diameter(g).diameter != 2)
            continue;
        bool ok = true;
        for (int v = 0; v < 8 && ok; ++v) {
            if (!(nkdl_vertex(g, v, 1) == DegreeList::from_sorted(kNdlRows[v])) ||
                !(nkdl_vertex(g, v, 2) == DegreeList::from_sorted(kN2dlRows[v])))
                ok = false;
        }
        if (ok)
            solutions.push_back(g.edges());
    }

    std::set<std::string> classes;
    for (const auto& edges : solutions)
        classes.insert(canonical_form(Graph::build(8, edges)));

    std::cout << "labeled solutions: " << solutions.size() << "\n";
    std::cout << "isomorphism classes: " << classes.size() << "\n";
    for (size_t i = 0; i < solutions.size(); ++i) {
        std::cout << "solution " << i << ":";
        for (auto [u, v] : solutions[i])
            std::cout << " " << u << "-" << v;
        std::cout << "\n";
    }
    if (!solutions.empty()) {
        std::cout << "frozen fixture (edge list):\n";
        for (auto [u, v] : solutions.front())
            std::cout << u << " " << v << "\n";
    }
    return solutions.empty() ? 1 : 0;
}
