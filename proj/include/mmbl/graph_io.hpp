#ifndef MMBL_GRAPH_IO_HPP_
#define MMBL_GRAPH_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mmbl/graph.hpp"

namespace mmbl {

// Text format, one statement per line:
//   A -> B      directed edge
//   A <-> B     bidirected edge
//   node X      declares X (isolated nodes)
//   # ...       comment
// Nodes are numbered in order of first appearance.
MixedGraph parse_graph(std::istream& in);
MixedGraph parse_graph(const std::string& text);
MixedGraph read_graph_file(const std::filesystem::path& path);

/// Inverse of parse_graph for graphs with directed and bidirected edges.
std::string format_graph(const MixedGraph& g);

/// Compact single-edge rendering such as "A o-> B".
std::string format_edge(const MixedGraph& g, NodeId a, NodeId b);

}  // namespace mmbl

#endif  // MMBL_GRAPH_IO_HPP_
