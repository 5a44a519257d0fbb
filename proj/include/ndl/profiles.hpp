#ifndef NDL_PROFILES_HPP
#define NDL_PROFILES_HPP

#include <compare>
#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

// Degree list in descending order; the value of NDL(v) and N_kDL(v).
class DegreeList {
public:
    DegreeList() = default;

    static DegreeList from_unsorted(std::vector<int> entries);
    // Caller guarantees descending order (checked in debug builds).
    static DegreeList from_sorted(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const DegreeList&, const DegreeList&) = default;

private:
    std::vector<int> entries_;
};

// Elementwise comparison; a proper prefix is less than the longer list.
std::strong_ordering lex_compare(const DegreeList& a, const DegreeList& b);

// Canonical multiset of degree lists; the value of NDL(G) and N_kDL(G).
// Stored sorted descending by (length, then lexicographic order), so
// equality is multiset equality.
class ProfileSet {
public:
    ProfileSet() = default;
    explicit ProfileSet(std::vector<DegreeList> lists);

    const std::vector<DegreeList>& lists() const { return lists_; }
    int size() const { return static_cast<int>(lists_.size()); }

    friend bool operator==(const ProfileSet&, const ProfileSet&) = default;
    // Deterministic total order, usable as a map key.
    bool operator<(const ProfileSet& other) const;

private:
    std::vector<DegreeList> lists_;
};

// Per-vertex degree lists for one fixed k. Distinct from ProfileSet:
// multiset statements use ProfileSet, per-vertex correspondence
// arguments use this.
struct LabeledProfile {
    int k = 1;
    std::vector<DegreeList> per_vertex;

    friend bool operator==(const LabeledProfile&, const LabeledProfile&) = default;
};

// (1, |N_1(v)|, ..., |N_e(v)(v)|); entries sum to the component size.
struct DistanceDegreeSequence {
    std::vector<int> entries;

    friend bool operator==(const DistanceDegreeSequence&, const DistanceDegreeSequence&) = default;
};

DegreeList degree_sequence(const Graph& g);

// Degrees of all vertices at distance exactly k from v, descending.
// Empty when N_k(v) is empty; k=1 gives NDL(v).
DegreeList nkdl_vertex(const Graph& g, int v, int k);

ProfileSet nkdl_graph(const Graph& g, int k);

LabeledProfile labeled_profile(const Graph& g, int k);

DistanceDegreeSequence distance_degree_sequence(const Graph& g, int v);

// deg(v) = n - 1 - |N_2(v)|; meaningful for diameter-2 graphs.
int degree_from_shell2(int n, int shell2_size);

// Multiset difference global_degrees - vertex_list - {own_degree},
// descending. Converts N_2DL(v) to NDL(v) on diameter-2 graphs and
// back.
DegreeList complement_profile(const DegreeList& vertex_list, int own_degree,
                              const DegreeList& global_degrees);

} // namespace ndl

#endif
