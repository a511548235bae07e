#include "mmbl/pag.hpp"

namespace mmbl {

bool MagKnowledge::nonadjacent(const MixedGraph&, NodeId a, NodeId b) const { return !mag_.graph().adjacent(a, b); }

Triple MagKnowledge::triple(const MixedGraph&, NodeId a, NodeId b, NodeId c) const {
    const MixedGraph& g = mag_.graph();
    if (g.adjacent(a, c)) return Triple::Unknown;
    return g.into(a, b) && g.into(c, b) ? Triple::Collider : Triple::Noncollider;
}

std::optional<bool> MagKnowledge::discriminated_collider(NodeId, NodeId a, NodeId b, NodeId c) const {
    const MixedGraph& g = mag_.graph();
    return g.mark_at(b, a) == Mark::Arrow && g.mark_at(b, c) == Mark::Arrow;
}

Pag pag_from_mag(const Mag& mag) {
    const MixedGraph& m = mag.graph();
    MixedGraph g(m.names());
    for (auto [a, b] : m.edges()) g.set_edge(a, b, Mark::Circle, Mark::Circle);

    RuleTrace trace;
    for (NodeId c = 0; c < m.size(); ++c) {
        const auto& nb = m.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const NodeId a = nb[i], b = nb[j];
                if (m.adjacent(a, b)) continue;
                if (m.mark_at(c, a) == Mark::Arrow && m.mark_at(c, b) == Mark::Arrow) {
                    orient_mark(g, c, a, Mark::Arrow, 0, trace);
                    orient_mark(g, c, b, Mark::Arrow, 0, trace);
                }
            }
        }
    }
    apply_rule_closure(g, MagKnowledge(mag), trace);
    return Pag(std::move(g));
}

}  // namespace mmbl
