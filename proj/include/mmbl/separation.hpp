#ifndef MMBL_SEPARATION_HPP_
#define MMBL_SEPARATION_HPP_

#include <optional>
#include <vector>

#include "mmbl/graph.hpp"

namespace mmbl {

/// {v : v -> ... -> x} plus x itself.
NodeSet ancestors(const MixedGraph& g, NodeId x);
NodeSet ancestors(const MixedGraph& g, const NodeSet& xs);
NodeSet descendants(const MixedGraph& g, NodeId x);

/// m-separation of x and y given z in a DAG or MAG.
///
/// Reachability over (node, entered-through-arrowhead) states. A node entered
/// and left through arrowheads is a collider and lets the walk pass only if it
/// is an ancestor of z; any other node passes only if it is outside z.
bool m_separated(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z);
inline bool m_separated(const Mag& g, NodeId x, NodeId y, const NodeSet& z) {
    return m_separated(g.graph(), x, y, z);
}
inline bool m_separated(const Dag& g, NodeId x, NodeId y, const NodeSet& z) {
    return m_separated(g.graph(), x, y, z);
}

/// Same contract as m_separated, by enumerating every simple path. Graphs of
/// at most kBruteForceLimit nodes only.
inline constexpr std::size_t kBruteForceLimit = 12;
bool m_separated_bruteforce(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z);

/// A path between x and y whose inner vertices are latent or colliders, every
/// collider being an ancestor of x or y.
std::optional<std::vector<NodeId>> find_inducing_path(const Dag& dag, NodeId x, NodeId y, const NodeSet& latents);

/// MAG over the observed nodes of `dag`. Node order of the result follows the
/// DAG order with latents skipped.
Mag latent_project(const Dag& dag, const NodeSet& latents);

/// Markov blanket of t in a MAG: parents, children, children's parents, the
/// districts of t and of its children, and the parents of those districts.
NodeSet graph_mmb(const Mag& mag, NodeId t);

/// Nodes reachable from x along bidirected edges, x included.
NodeSet district(const MixedGraph& g, NodeId x);

/// No non-adjacent pair is m-connected given every separating candidate.
bool is_maximal(const MixedGraph& g);

}  // namespace mmbl

#endif  // MMBL_SEPARATION_HPP_
