#include "ndl/profiles.hpp"

#include <algorithm>
#include <cassert>

namespace ndl {

DegreeList DegreeList::from_unsorted(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end(), std::greater<int>());
    DegreeList l;
    l.entries_ = std::move(entries);
    return l;
}

DegreeList DegreeList::from_sorted(std::vector<int> entries) {
    assert(std::is_sorted(entries.begin(), entries.end(), std::greater<int>()));
    DegreeList l;
    l.entries_ = std::move(entries);
    return l;
}

std::strong_ordering lex_compare(const DegreeList& a, const DegreeList& b) {
    const auto& x = a.entries();
    const auto& y = b.entries();
    size_t m = std::min(x.size(), y.size());
    for (size_t i = 0; i < m; ++i) {
        if (x[i] != y[i])
            return x[i] <=> y[i];
    }
    // proper prefix: the longer list is greater
    return x.size() <=> y.size();
}

namespace {

// Canonical ProfileSet order: descending by length, then descending
// lexicographically. Length-first so degree recovery by list length is
// immediate.
bool profile_before(const DegreeList& a, const DegreeList& b) {
    if (a.size() != b.size())
        return a.size() > b.size();
    return lex_compare(a, b) == std::strong_ordering::greater;
}

} // namespace

ProfileSet::ProfileSet(std::vector<DegreeList> lists) : lists_(std::move(lists)) {
    std::sort(lists_.begin(), lists_.end(), profile_before);
}

bool ProfileSet::operator<(const ProfileSet& other) const {
    return std::lexicographical_compare(
        lists_.begin(), lists_.end(), other.lists_.begin(), other.lists_.end(),
        [](const DegreeList& a, const DegreeList& b) { return profile_before(a, b); });
}

DegreeList degree_sequence(const Graph& g) {
    std::vector<int> degs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        degs[v] = g.degree(v);
    return DegreeList::from_unsorted(std::move(degs));
}

DegreeList nkdl_vertex(const Graph& g, int v, int k) {
    if (k == 1) { // the 1-shell is just the adjacency list
        std::vector<int> degs;
        degs.reserve(g.neighbors(v).size());
        for (int u : g.neighbors(v))
            degs.push_back(g.degree(u));
        return DegreeList::from_unsorted(std::move(degs));
    }
    auto shell = neighborhood_k(g, v, k);
    std::vector<int> degs;
    degs.reserve(shell.size());
    for (int u : shell)
        degs.push_back(g.degree(u));
    return DegreeList::from_unsorted(std::move(degs));
}

ProfileSet nkdl_graph(const Graph& g, int k) {
    std::vector<DegreeList> lists;
    lists.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        lists.push_back(nkdl_vertex(g, v, k));
    return ProfileSet(std::move(lists));
}

LabeledProfile labeled_profile(const Graph& g, int k) {
    LabeledProfile p;
    p.k = k;
    p.per_vertex.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        p.per_vertex.push_back(nkdl_vertex(g, v, k));
    return p;
}

DistanceDegreeSequence distance_degree_sequence(const Graph& g, int v) {
    auto d = bfs_distances(g, v);
    int ecc = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        ecc = std::max(ecc, d.dist[u]); // unreachable = -1, ignored by max
    DistanceDegreeSequence seq;
    seq.entries.assign(ecc + 1, 0);
    seq.entries[0] = 1;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (d.dist[u] > 0)
            ++seq.entries[d.dist[u]];
    return seq;
}

int degree_from_shell2(int n, int shell2_size) {
    if (shell2_size < 0 || shell2_size > n - 1)
        throw Error(ErrorCode::range, "shell size exceeds n-1");
    return n - 1 - shell2_size;
}

DegreeList complement_profile(const DegreeList& vertex_list, int own_degree,
                              const DegreeList& global_degrees) {
    // global is descending; consume matching entries of the (descending)
    // removal multiset in one pass
    std::vector<int> removals = vertex_list.entries();
    removals.push_back(own_degree);
    std::sort(removals.begin(), removals.end(), std::greater<int>());

    std::vector<int> out;
    const auto& global = global_degrees.entries();
    size_t r = 0;
    for (size_t i = 0; i < global.size(); ++i) {
        if (r < removals.size() && removals[r] == global[i]) {
            ++r;
            continue;
        }
        if (r < removals.size() && removals[r] > global[i])
            throw Error(ErrorCode::not_submultiset,
                        "profile plus own degree is not contained in the degree sequence");
        out.push_back(global[i]);
    }
    if (r != removals.size())
        throw Error(ErrorCode::not_submultiset,
                    "profile plus own degree is not contained in the degree sequence");
    return DegreeList::from_sorted(std::move(out));
}

} // namespace ndl
