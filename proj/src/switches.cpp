#include "ndl/switches.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ndl {

namespace {

std::tuple<int, int, int, int> as_tuple(const TwoSwitch& s) {
    return {s.v1, s.v2, s.w1, s.w2};
}

} // namespace

TwoSwitch TwoSwitch::canonical() const {
    TwoSwitch variants[4] = {
        {v1, v2, w1, w2},
        {w1, w2, v1, v2},
        {v2, v1, w2, w1},
        {w2, w1, v2, v1},
    };
    return *std::min_element(std::begin(variants), std::end(variants),
                             [](const TwoSwitch& a, const TwoSwitch& b) {
                                 return as_tuple(a) < as_tuple(b);
                             });
}

SwitchClass classify_switch(const Graph& g, const TwoSwitch& s) {
    for (int v : {s.v1, s.v2, s.w1, s.w2})
        if (!g.has_vertex(v))
            throw Error(ErrorCode::out_of_range, "switch vertex out of range");
    int vs[4] = {s.v1, s.v2, s.w1, s.w2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j])
                return SwitchClass::invalid;
    if (!g.adjacent(s.v1, s.v2) || !g.adjacent(s.w1, s.w2))
        return SwitchClass::invalid;
    if (g.adjacent(s.v1, s.w2) || g.adjacent(s.v2, s.w1))
        return SwitchClass::invalid;
    if (g.degree(s.v1) == g.degree(s.w1) && g.degree(s.v2) == g.degree(s.w2))
        return SwitchClass::degree_restricted;
    return SwitchClass::plain;
}

Graph apply_switch(const Graph& g, const TwoSwitch& s) {
    if (classify_switch(g, s) == SwitchClass::invalid)
        throw Error(ErrorCode::invalid_switch, "switch is not applicable");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    auto drop_a = std::minmax(s.v1, s.v2);
    auto drop_b = std::minmax(s.w1, s.w2);
    for (auto e : g.edges()) {
        if (e == std::pair(drop_a.first, drop_a.second) ||
            e == std::pair(drop_b.first, drop_b.second))
            continue;
        edges.push_back(e);
    }
    edges.emplace_back(s.v1, s.w2);
    edges.emplace_back(s.v2, s.w1);
    return Graph::build(g.vertex_count(), edges);
}

TwoSwitch inverse_switch(const TwoSwitch& s) {
    return {s.v1, s.w2, s.w1, s.v2};
}

std::vector<TwoSwitch> enumerate_switches(const Graph& g, bool restricted) {
    std::set<std::tuple<int, int, int, int>> seen;
    std::vector<TwoSwitch> out;
    const auto& edges = g.edges();
    for (size_t a = 0; a < edges.size(); ++a) {
        for (size_t b = a + 1; b < edges.size(); ++b) {
            int ends_a[2][2] = {{edges[a].first, edges[a].second},
                                {edges[a].second, edges[a].first}};
            int ends_b[2][2] = {{edges[b].first, edges[b].second},
                                {edges[b].second, edges[b].first}};
            for (auto& ea : ends_a) {
                for (auto& eb : ends_b) {
                    TwoSwitch s{ea[0], ea[1], eb[0], eb[1]};
                    auto cls = classify_switch(g, s);
                    if (cls == SwitchClass::invalid)
                        continue;
                    if (restricted && cls != SwitchClass::degree_restricted)
                        continue;
                    auto canon = s.canonical();
                    if (seen.insert(as_tuple(canon)).second)
                        out.push_back(canon);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const TwoSwitch& x, const TwoSwitch& y) {
        return as_tuple(x) < as_tuple(y);
    });
    return out;
}

} // namespace ndl
