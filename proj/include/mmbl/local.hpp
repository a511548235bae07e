#ifndef MMBL_LOCAL_HPP_
#define MMBL_LOCAL_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mmbl/ci.hpp"
#include "mmbl/graph.hpp"

namespace mmbl {

/// Separating sets keyed by unordered node pair.
class SepsetCache {
public:
    void set(NodeId a, NodeId b, NodeSet s) { sets_[key(a, b)] = std::move(s); }
    /// Keeps an existing entry.
    void add(NodeId a, NodeId b, const NodeSet& s) { sets_.emplace(key(a, b), s); }
    const NodeSet* find(NodeId a, NodeId b) const {
        auto it = sets_.find(key(a, b));
        return it == sets_.end() ? nullptr : &it->second;
    }
    bool contains(NodeId a, NodeId b) const { return find(a, b) != nullptr; }
    std::size_t size() const { return sets_.size(); }
    const std::map<std::pair<NodeId, NodeId>, NodeSet>& entries() const { return sets_; }

private:
    static std::pair<NodeId, NodeId> key(NodeId a, NodeId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }
    std::map<std::pair<NodeId, NodeId>, NodeSet> sets_;
};

/// Skeleton and collider marks learned over `scope`. The graph spans every
/// backend variable; only scope members carry edges.
struct LocalStructure {
    NodeSet scope;
    MixedGraph graph;
    SepsetCache sepsets;
};

/**
 * Order-independent (level-synchronous) PC adjacency search over `scope`.
 *
 * Starts from the complete circle graph and, for conditioning size 0, 1, ...,
 * tests every ordered adjacent pair (a, b) against subsets of a's neighbours
 * as they stood at the start of the level. An edge goes at its first
 * independence and the conditioning set is kept as its sepset.
 */
LocalStructure learn_skeleton(CiBackend& backend, const NodeSet& scope);

/// Arrowheads at c for every unshielded a - c - b with c outside sepset(a, b).
LocalStructure orient_v_structures(LocalStructure ls);

/// The skeleton and sepsets of `ls` restricted to `scope`, re-oriented.
LocalStructure restrict_structure(const LocalStructure& ls, const NodeSet& scope);

struct SelectedEdge {
    NodeId a = 0;
    NodeId b = 0;
    Mark at_a = Mark::Circle;
    Mark at_b = Mark::Circle;
};

/// Edges at the pivot with their learned marks, plus b o-> c for every
/// collider pivot *-> c <-* b.
std::vector<SelectedEdge> select_pivot_info(const LocalStructure& ls, NodeId pivot);

}  // namespace mmbl

#endif  // MMBL_LOCAL_HPP_
