#ifndef MMBL_PAG_HPP_
#define MMBL_PAG_HPP_

#include "mmbl/graph.hpp"
#include "mmbl/orient.hpp"

namespace mmbl {

/// Orientation knowledge read off a known MAG: adjacency is exact and a
/// discriminated vertex is a collider iff it is one in the MAG.
class MagKnowledge : public OrientationKnowledge {
public:
    explicit MagKnowledge(const Mag& mag) : mag_(mag) {}
    bool nonadjacent(const MixedGraph& g, NodeId a, NodeId b) const override;
    Triple triple(const MixedGraph& g, NodeId a, NodeId b, NodeId c) const override;
    std::optional<bool> discriminated_collider(NodeId theta, NodeId a, NodeId b, NodeId c) const override;

private:
    const Mag& mag_;
};

/// The PAG of the Markov equivalence class of `mag`: its skeleton with circle
/// marks, arrowheads at every unshielded collider, then rule_closure.
Pag pag_from_mag(const Mag& mag);

}  // namespace mmbl

#endif  // MMBL_PAG_HPP_
