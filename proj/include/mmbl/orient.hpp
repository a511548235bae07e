#ifndef MMBL_ORIENT_HPP_
#define MMBL_ORIENT_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmbl/graph.hpp"

namespace mmbl {

class OrientationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One mark change made by an orientation rule.
struct RuleStep {
    int rule = 0;  // 0 = collider orientation, otherwise the rule number
    NodeId a = 0;
    NodeId b = 0;
    Mark old_at_a = Mark::Circle;
    Mark old_at_b = Mark::Circle;
    Mark new_at_a = Mark::Circle;
    Mark new_at_b = Mark::Circle;
};
using RuleTrace = std::vector<RuleStep>;

/// Status of an unshielded triple a - b - c.
enum class Triple { Unknown, Collider, Noncollider };

/**
 * What the rules may assume beyond the marks of the graph being oriented.
 *
 * The default treats every missing edge as a true non-adjacency, takes an
 * unshielded triple to be a collider exactly when both marks at the middle
 * are arrowheads, and knows no separating sets, so the discriminating-path
 * rule never fires. Callers that orient a fragment of a larger graph, or that
 * know the underlying MAG, override these.
 */
class OrientationKnowledge {
public:
    virtual ~OrientationKnowledge() = default;

    virtual bool nonadjacent(const MixedGraph& g, NodeId a, NodeId b) const { return !g.adjacent(a, b); }

    /// Unknown unless a and c are known to be non-adjacent.
    virtual Triple triple(const MixedGraph& g, NodeId a, NodeId b, NodeId c) const {
        if (!nonadjacent(g, a, c)) return Triple::Unknown;
        return g.into(a, b) && g.into(c, b) ? Triple::Collider : Triple::Noncollider;
    }

    /// For a discriminating path from `theta` to `c` for `b`, with `a` the
    /// vertex preceding `b`: true if b is a collider on <a, b, c>, false if
    /// not, nullopt if undecidable.
    virtual std::optional<bool> discriminated_collider(NodeId theta, NodeId a, NodeId b, NodeId c) const {
        (void)theta, (void)a, (void)b, (void)c;
        return std::nullopt;
    }
};

struct ClosureResult {
    Pag pag;
    RuleTrace trace;
};

/// Orients every unshielded triple the knowledge reports as a collider, then
/// applies R1-R4 and R8-R10 (the rules that hold without selection bias) until
/// no rule fires. Rules that need a non-collider only fire on triples the
/// knowledge reports as such. Rules run in ascending order and each pass visits edges in
/// index order. Throws OrientationError if a rule would overwrite a
/// non-circle mark with a different one.
ClosureResult rule_closure(const Pag& p, const OrientationKnowledge& knowledge = OrientationKnowledge{});

/// In-place variant; appends to `trace`. With `conflicts` given, a rule that
/// would overwrite a non-circle mark leaves it unchanged and appends a message
/// there instead of throwing.
void apply_rule_closure(MixedGraph& g, const OrientationKnowledge& knowledge, RuleTrace& trace,
                        std::vector<std::string>* conflicts = nullptr);

/// Sets the mark at `at` on edge at-other, recording the change. Returns false
/// if the mark already has that value; throws OrientationError if it holds a
/// different non-circle mark.
bool orient_mark(MixedGraph& g, NodeId at, NodeId other, Mark m, int rule, RuleTrace& trace);

/// True iff no edge at t carries a circle at either end.
bool marks_determined_at(const MixedGraph& g, NodeId t);
inline bool marks_determined_at(const Pag& p, NodeId t) { return marks_determined_at(p.graph(), t); }

std::size_t count_circles(const MixedGraph& g);

}  // namespace mmbl

#endif  // MMBL_ORIENT_HPP_
