#ifndef NDL_CANONICAL_HPP
#define NDL_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

// Exact canonicalization works by backtracking over vertex orderings;
// keep it to small graphs.
inline constexpr int kDefaultCanonicalBound = 10;
inline constexpr int kDefaultIsomorphismBound = 12;

struct CanonicalLabeling {
    std::string form;            // canonical graph6 bytes
    VertexBijection to_canonical; // relabel(g, to_canonical) has form `form`
};

// Canonical byte string: equal strings iff the graphs are isomorphic.
// Exact search over degree/refinement-compatible orderings.
std::string canonical_form(const Graph& g, int max_n = kDefaultCanonicalBound);

CanonicalLabeling canonical_labeling(const Graph& g, int max_n = kDefaultCanonicalBound);

// Bijection pi with {u,v} in E(g) iff {pi(u),pi(v)} in E(h), or nullopt.
// Independent backtracking search (not derived from canonical_form).
std::optional<VertexBijection> find_isomorphism(const Graph& g, const Graph& h,
                                                int max_n = kDefaultIsomorphismBound);

// Stable color refinement (1-WL). Color ids are canonical: isomorphic
// graphs receive identical color multisets and corresponding vertices
// identical colors.
std::vector<int> refinement_colors(const Graph& g);

} // namespace ndl

#endif
