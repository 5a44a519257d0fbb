#ifndef NDL_GRAPH6_HPP
#define NDL_GRAPH6_HPP

#include <functional>
#include <string>
#include <string_view>

#include "ndl/graph.hpp"

namespace ndl {

// graph6: printable encoding of the upper-triangle adjacency bits in
// column order (0,1),(0,2),(1,2),(0,3),..., packed 6 per byte, each
// byte offset by 63. Optional ">>graph6<<" header accepted on parse.
Graph parse_graph6(std::string_view line);

// Exact inverse of parse_graph6; no header. Single size byte for
// n <= 62, the standard multi-byte forms above that.
std::string write_graph6(const Graph& g);

namespace detail {
// Shared bit packer; `adj(i,j)` queried for i < j.
std::string encode_graph6(int n, const std::function<bool(int, int)>& adj);
} // namespace detail

} // namespace ndl

#endif
