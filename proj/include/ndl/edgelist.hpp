#ifndef NDL_EDGELIST_HPP
#define NDL_EDGELIST_HPP

#include <string>
#include <string_view>

#include "ndl/graph.hpp"

namespace ndl {

// Text format: one "u v" pair per line, '#' starts a comment, optional
// first line "n=<int>" fixes the vertex count (otherwise n = 1 + max
// endpoint).
Graph parse_edge_list(std::string_view text);

// Reads a graph file, dispatching on extension: ".g6" = graph6 (first
// non-empty line), anything else = edge-list text.
Graph load_graph_file(const std::string& path);

} // namespace ndl

#endif
