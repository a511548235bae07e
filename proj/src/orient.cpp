#include "mmbl/orient.hpp"

#include <deque>
#include <functional>

#include "mmbl/graph_io.hpp"

namespace mmbl {

namespace {

bool circle_at(const MixedGraph& g, NodeId at, NodeId other) { return g.mark_at(at, other) == Mark::Circle; }
bool arrow_at(const MixedGraph& g, NodeId at, NodeId other) { return g.mark_at(at, other) == Mark::Arrow; }
bool tail_at(const MixedGraph& g, NodeId at, NodeId other) { return g.mark_at(at, other) == Mark::Tail; }

// a -> b
bool directed(const MixedGraph& g, NodeId a, NodeId b) { return tail_at(g, a, b) && arrow_at(g, b, a); }

// Edge a-b can start a potentially directed path from a to b.
bool potentially_directed(const MixedGraph& g, NodeId a, NodeId b) {
    return !arrow_at(g, a, b) && !tail_at(g, b, a);
}

class RuleEngine {
public:
    RuleEngine(MixedGraph& g, const OrientationKnowledge& k, RuleTrace& trace, std::vector<std::string>* conflicts)
        : g_(g), k_(k), trace_(trace), conflicts_(conflicts) {}

    bool run_pass() {
        bool changed = false;
        changed |= colliders();
        changed |= rule1();
        changed |= rule2();
        changed |= rule3();
        changed |= rule4();
        changed |= rule8();
        changed |= rule9();
        changed |= rule10();
        return changed;
    }

private:
    bool set(NodeId at, NodeId other, Mark m, int rule) {
        if (conflicts_) {
            const Mark cur = g_.mark_at(at, other);
            if (cur != Mark::Circle && cur != m) {
                conflicts_->push_back("conflict: rule " + std::to_string(rule) + " kept " + std::string(to_string(cur)) +
                                      " at " + g_.name(at) + " on " + format_edge(g_, at, other));
                return false;
            }
        }
        return orient_mark(g_, at, other, m, rule, trace_);
    }
    bool nonadj(NodeId a, NodeId b) const { return k_.nonadjacent(g_, a, b); }
    bool noncollider(NodeId a, NodeId b, NodeId c) const { return k_.triple(g_, a, b, c) == Triple::Noncollider; }

    // a *-* b *-* c with a, c non-adjacent and known to collide at b
    bool colliders() {
        bool changed = false;
        for (NodeId b = 0; b < g_.size(); ++b) {
            const auto& nb = g_.neighbors(b);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    const NodeId a = nb[i], c = nb[j];
                    if (g_.adjacent(a, c) || (arrow_at(g_, b, a) && arrow_at(g_, b, c))) continue;
                    if (k_.triple(g_, a, b, c) != Triple::Collider) continue;
                    changed |= set(b, a, Mark::Arrow, 0);
                    changed |= set(b, c, Mark::Arrow, 0);
                }
            }
        }
        return changed;
    }

    // a *-> b o-* c, a and c not adjacent, no collider at b  =>  b -> c
    bool rule1() {
        bool changed = false;
        for (NodeId b = 0; b < g_.size(); ++b) {
            for (NodeId a : g_.neighbors(b)) {
                if (!arrow_at(g_, b, a)) continue;
                for (NodeId c : g_.neighbors(b)) {
                    if (c == a || !circle_at(g_, b, c) || !noncollider(a, b, c)) continue;
                    changed |= set(b, c, Mark::Tail, 1);
                    changed |= set(c, b, Mark::Arrow, 1);
                }
            }
        }
        return changed;
    }

    // a -> b *-> c or a *-> b -> c, and a *-o c  =>  a *-> c
    bool rule2() {
        bool changed = false;
        for (NodeId a = 0; a < g_.size(); ++a) {
            for (NodeId c : g_.neighbors(a)) {
                if (!circle_at(g_, c, a)) continue;
                for (NodeId b : g_.neighbors(a)) {
                    if (b == c || !g_.adjacent(b, c)) continue;
                    const bool first = directed(g_, a, b) && arrow_at(g_, c, b);
                    const bool second = arrow_at(g_, b, a) && directed(g_, b, c);
                    if (first || second) {
                        changed |= set(c, a, Mark::Arrow, 2);
                        break;
                    }
                }
            }
        }
        return changed;
    }

    // a *-> b <-* c, a *-o d o-* c, a and c not adjacent, d *-o b  =>  d *-> b
    bool rule3() {
        bool changed = false;
        for (NodeId b = 0; b < g_.size(); ++b) {
            for (NodeId d : g_.neighbors(b)) {
                if (!circle_at(g_, b, d)) continue;
                bool fired = false;
                for (NodeId a : g_.neighbors(b)) {
                    if (fired) break;
                    if (a == d || !arrow_at(g_, b, a) || !g_.adjacent(a, d) || !circle_at(g_, d, a)) continue;
                    for (NodeId c : g_.neighbors(b)) {
                        if (c <= a || c == d || !arrow_at(g_, b, c) || !g_.adjacent(c, d) || !circle_at(g_, d, c))
                            continue;
                        if (!noncollider(a, d, c)) continue;
                        changed |= set(b, d, Mark::Arrow, 3);
                        fired = true;
                        break;
                    }
                }
            }
        }
        return changed;
    }

    // Discriminating path <theta, ..., a, b, c> for b with b o-* c.
    bool rule4() {
        bool changed = false;
        for (NodeId b = 0; b < g_.size(); ++b) {
            for (NodeId c : g_.neighbors(b)) {
                if (!circle_at(g_, b, c)) continue;
                for (NodeId a : g_.neighbors(b)) {
                    if (a == c || !g_.adjacent(a, c) || !directed(g_, a, c) || !arrow_at(g_, a, b)) continue;
                    auto theta = discriminating_end(a, b, c);
                    if (!theta) continue;
                    auto collider = k_.discriminated_collider(*theta, a, b, c);
                    if (!collider) continue;
                    if (*collider) {
                        changed |= set(b, a, Mark::Arrow, 4);
                        changed |= set(b, c, Mark::Arrow, 4);
                        changed |= set(c, b, Mark::Arrow, 4);
                    } else {
                        changed |= set(b, c, Mark::Tail, 4);
                        changed |= set(c, b, Mark::Arrow, 4);
                    }
                    break;
                }
            }
        }
        return changed;
    }

    // Breadth-first search back from a for the far end of a discriminating
    // path: every inner vertex is a collider on the path and a parent of c.
    std::optional<NodeId> discriminating_end(NodeId a, NodeId b, NodeId c) const {
        std::vector<char> seen(g_.size(), 0);
        seen[a] = seen[b] = seen[c] = 1;
        std::deque<NodeId> queue{a};
        while (!queue.empty()) {
            const NodeId v = queue.front();
            queue.pop_front();
            for (NodeId w : g_.neighbors(v)) {
                if (seen[w] || !arrow_at(g_, v, w)) continue;  // need w *-> v
                if (!g_.adjacent(w, c)) {
                    if (nonadj(w, c)) return w;
                    continue;
                }
                if (directed(g_, w, c) && arrow_at(g_, w, v)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        return std::nullopt;
    }

    // a -> b -> c or a -o b -> c, and a o-> c  =>  a -> c
    bool rule8() {
        bool changed = false;
        for (NodeId a = 0; a < g_.size(); ++a) {
            for (NodeId c : g_.neighbors(a)) {
                if (!circle_at(g_, a, c) || !arrow_at(g_, c, a)) continue;
                for (NodeId b : g_.neighbors(a)) {
                    if (b == c || !g_.adjacent(b, c)) continue;
                    if (tail_at(g_, a, b) && !tail_at(g_, b, a) && directed(g_, b, c)) {
                        changed |= set(a, c, Mark::Tail, 8);
                        break;
                    }
                }
            }
        }
        return changed;
    }

    // Vertices reachable from `start` by an uncovered potentially directed
    // path a, start, ..., x avoiding `avoid`; calls visit(x) for each end.
    void uncovered_pd_paths(NodeId a, NodeId start, NodeId avoid, const std::function<bool(NodeId)>& visit) const {
        std::vector<char> on_path(g_.size(), 0);
        on_path[a] = on_path[start] = 1;
        std::function<bool(NodeId, NodeId)> dfs = [&](NodeId prev, NodeId cur) -> bool {
            if (visit(cur)) return true;
            for (NodeId nxt : g_.neighbors(cur)) {
                if (on_path[nxt] || nxt == avoid) continue;
                if (!potentially_directed(g_, cur, nxt) || !noncollider(prev, cur, nxt)) continue;
                on_path[nxt] = 1;
                if (dfs(cur, nxt)) return true;
                on_path[nxt] = 0;
            }
            return false;
        };
        dfs(a, start);
    }

    // a o-> c and an uncovered p.d. path <a, b, d, ..., c> with b, c not
    // adjacent  =>  a -> c
    bool rule9() {
        bool changed = false;
        for (NodeId a = 0; a < g_.size(); ++a) {
            for (NodeId c : g_.neighbors(a)) {
                if (!circle_at(g_, a, c) || !arrow_at(g_, c, a)) continue;
                bool found = false;
                for (NodeId b : g_.neighbors(a)) {
                    if (b == c || !potentially_directed(g_, a, b) || !noncollider(c, a, b)) continue;
                    // the path must reach c through a p.d. edge into c; the
                    // walk below only enters c as a terminal
                    std::vector<char> on_path(g_.size(), 0);
                    on_path[a] = on_path[b] = 1;
                    std::function<bool(NodeId, NodeId)> dfs = [&](NodeId prev, NodeId cur) -> bool {
                        for (NodeId nxt : g_.neighbors(cur)) {
                            if (on_path[nxt]) continue;
                            if (!potentially_directed(g_, cur, nxt) || !noncollider(prev, cur, nxt)) continue;
                            if (nxt == c) return true;
                            on_path[nxt] = 1;
                            if (dfs(cur, nxt)) return true;
                            on_path[nxt] = 0;
                        }
                        return false;
                    };
                    if (dfs(a, b)) {
                        found = true;
                        break;
                    }
                }
                if (found) changed |= set(a, c, Mark::Tail, 9);
            }
        }
        return changed;
    }

    // a o-> c, b -> c <- d, uncovered p.d. paths from a to b and from a to d
    // whose first vertices after a are distinct and not adjacent  =>  a -> c
    bool rule10() {
        bool changed = false;
        for (NodeId a = 0; a < g_.size(); ++a) {
            for (NodeId c : g_.neighbors(a)) {
                if (!circle_at(g_, a, c) || !arrow_at(g_, c, a)) continue;
                std::vector<NodeId> pa;
                for (NodeId v : g_.neighbors(c))
                    if (v != a && directed(g_, v, c)) pa.push_back(v);
                if (pa.size() < 2) continue;

                // firsts[i] = first vertices of uncovered p.d. paths a ... pa[i]
                std::vector<NodeSet> firsts(pa.size());
                for (NodeId mu : g_.neighbors(a)) {
                    if (mu == c || !potentially_directed(g_, a, mu)) continue;
                    for (std::size_t i = 0; i < pa.size(); ++i) {
                        const NodeId target = pa[i];
                        uncovered_pd_paths(a, mu, c, [&](NodeId x) {
                            if (x == target) {
                                firsts[i].insert(mu);
                                return true;
                            }
                            return false;
                        });
                    }
                }
                bool fire = false;
                for (std::size_t i = 0; i < pa.size() && !fire; ++i)
                    for (std::size_t j = i + 1; j < pa.size() && !fire; ++j)
                        for (NodeId mu : firsts[i])
                            for (NodeId omega : firsts[j])
                                if (mu != omega && noncollider(mu, a, omega)) fire = true;
                if (fire) changed |= set(a, c, Mark::Tail, 10);
            }
        }
        return changed;
    }

    MixedGraph& g_;
    const OrientationKnowledge& k_;
    RuleTrace& trace_;
    std::vector<std::string>* conflicts_;
};

}  // namespace

bool orient_mark(MixedGraph& g, NodeId at, NodeId other, Mark m, int rule, RuleTrace& trace) {
    const Mark cur = g.mark_at(at, other);
    if (cur == m) return false;
    if (cur != Mark::Circle)
        throw OrientationError("inconsistent orientation: rule " + std::to_string(rule) + " sets " +
                               std::string(to_string(m)) + " at " + g.name(at) + " on " + format_edge(g, at, other));
    RuleStep step;
    step.rule = rule;
    step.a = at;
    step.b = other;
    step.old_at_a = cur;
    step.old_at_b = g.mark_at(other, at);
    g.set_mark(at, other, m);
    step.new_at_a = m;
    step.new_at_b = step.old_at_b;
    trace.push_back(step);
    return true;
}

void apply_rule_closure(MixedGraph& g, const OrientationKnowledge& knowledge, RuleTrace& trace,
                        std::vector<std::string>* conflicts) {
    RuleEngine engine(g, knowledge, trace, conflicts);
    while (engine.run_pass()) {
    }
}

ClosureResult rule_closure(const Pag& p, const OrientationKnowledge& knowledge) {
    ClosureResult out{p, {}};
    apply_rule_closure(out.pag.graph(), knowledge, out.trace);
    return out;
}

bool marks_determined_at(const MixedGraph& g, NodeId t) {
    for (NodeId v : g.neighbors(t))
        if (circle_at(g, t, v) || circle_at(g, v, t)) return false;
    return true;
}

std::size_t count_circles(const MixedGraph& g) {
    std::size_t n = 0;
    for (auto [a, b] : g.edges()) n += circle_at(g, a, b) + circle_at(g, b, a);
    return n;
}

}  // namespace mmbl
