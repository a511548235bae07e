#include "mmbl/separation.hpp"

#include <functional>

namespace mmbl {

namespace {

void require_node(const MixedGraph& g, NodeId v) {
    if (v >= g.size()) throw GraphError("node index " + std::to_string(v) + " out of range");
}

void require_query(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z) {
    require_node(g, x);
    require_node(g, y);
    for (NodeId v : z) require_node(g, v);
    if (x == y) throw GraphError("separation query needs two distinct nodes");
    if (z.count(x) || z.count(y)) throw GraphError("conditioning set contains a queried node");
    if (g.has_mark(Mark::Circle)) throw GraphError("m-separation is undefined on graphs with circle marks");
}

}  // namespace

NodeSet ancestors(const MixedGraph& g, const NodeSet& xs) {
    NodeSet seen;
    std::vector<NodeId> stack;
    for (NodeId x : xs) {
        require_node(g, x);
        if (seen.insert(x).second) stack.push_back(x);
    }
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : g.neighbors(v))
            if (g.is_directed(u, v) && seen.insert(u).second) stack.push_back(u);
    }
    return seen;
}

NodeSet ancestors(const MixedGraph& g, NodeId x) { return ancestors(g, NodeSet{x}); }

NodeSet descendants(const MixedGraph& g, NodeId x) {
    require_node(g, x);
    NodeSet seen{x};
    std::vector<NodeId> stack{x};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : g.neighbors(v))
            if (g.is_directed(v, u) && seen.insert(u).second) stack.push_back(u);
    }
    return seen;
}

bool m_separated(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z) {
    require_query(g, x, y, z);
    const NodeSet an_z = ancestors(g, z);
    const std::size_t n = g.size();

    // state index: 2 * node + (entered through an arrowhead)
    std::vector<char> seen(2 * n, 0);
    std::vector<std::pair<NodeId, bool>> stack;
    for (NodeId w : g.neighbors(x)) {
        if (w == y) return false;
        const bool head = g.mark_at(w, x) == Mark::Arrow;
        if (!seen[2 * w + head]) {
            seen[2 * w + head] = 1;
            stack.emplace_back(w, head);
        }
    }
    while (!stack.empty()) {
        auto [v, head_in] = stack.back();
        stack.pop_back();
        for (NodeId u : g.neighbors(v)) {
            const bool collider = head_in && g.mark_at(v, u) == Mark::Arrow;
            const bool pass = collider ? an_z.count(v) > 0 : z.count(v) == 0;
            if (!pass) continue;
            if (u == y) return false;
            const bool head = g.mark_at(u, v) == Mark::Arrow;
            if (!seen[2 * u + head]) {
                seen[2 * u + head] = 1;
                stack.emplace_back(u, head);
            }
        }
    }
    return true;
}

bool m_separated_bruteforce(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z) {
    if (g.size() > kBruteForceLimit)
        throw GraphError("brute-force m-separation limited to " + std::to_string(kBruteForceLimit) + " nodes");
    require_query(g, x, y, z);

    std::vector<NodeId> path{x};
    std::vector<char> on_path(g.size(), 0);
    on_path[x] = 1;

    auto connecting = [&]() {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const NodeId v = path[i];
            const bool collider =
                g.mark_at(v, path[i - 1]) == Mark::Arrow && g.mark_at(v, path[i + 1]) == Mark::Arrow;
            if (collider) {
                bool open = false;
                for (NodeId d : descendants(g, v))
                    if (z.count(d)) open = true;
                if (!open) return false;
            } else if (z.count(v)) {
                return false;
            }
        }
        return true;
    };

    std::function<bool(NodeId)> dfs = [&](NodeId v) -> bool {
        for (NodeId u : g.neighbors(v)) {
            if (on_path[u]) continue;
            path.push_back(u);
            if (u == y) {
                if (connecting()) return true;
            } else {
                on_path[u] = 1;
                if (dfs(u)) return true;
                on_path[u] = 0;
            }
            path.pop_back();
        }
        return false;
    };
    return !dfs(x);
}

std::optional<std::vector<NodeId>> find_inducing_path(const Dag& dag, NodeId x, NodeId y, const NodeSet& latents) {
    const MixedGraph& g = dag.graph();
    require_node(g, x);
    require_node(g, y);
    if (x == y) throw GraphError("inducing path needs two distinct nodes");
    if (latents.count(x) || latents.count(y)) throw GraphError("inducing path endpoints must be observed");
    for (NodeId l : latents) require_node(g, l);

    const NodeSet an_xy = ancestors(g, NodeSet{x, y});
    std::vector<NodeId> path{x};
    std::vector<char> on_path(g.size(), 0);
    on_path[x] = 1;

    // Extending prev - v - next makes v an inner vertex; check it then.
    auto inner_ok = [&](NodeId prev, NodeId v, NodeId next) {
        const bool collider = g.into(prev, v) && g.into(next, v);
        return collider ? an_xy.count(v) > 0 : latents.count(v) > 0;
    };

    std::function<bool(NodeId)> dfs = [&](NodeId v) -> bool {
        for (NodeId u : g.neighbors(v)) {
            if (on_path[u]) continue;
            if (path.size() >= 2 && !inner_ok(path[path.size() - 2], v, u)) continue;
            path.push_back(u);
            if (u == y) return true;
            on_path[u] = 1;
            if (dfs(u)) return true;
            on_path[u] = 0;
            path.pop_back();
        }
        return false;
    };
    if (dfs(x)) return path;
    return std::nullopt;
}

Mag latent_project(const Dag& dag, const NodeSet& latents) {
    const MixedGraph& g = dag.graph();
    for (NodeId l : latents) require_node(g, l);

    std::vector<NodeId> observed;
    for (NodeId v = 0; v < g.size(); ++v)
        if (!latents.count(v)) observed.push_back(v);

    std::vector<NodeSet> an(g.size());
    for (NodeId v : observed) an[v] = ancestors(g, v);

    MixedGraph out;
    for (NodeId v : observed) out.add_node(g.name(v));
    for (std::size_t i = 0; i < observed.size(); ++i) {
        for (std::size_t j = i + 1; j < observed.size(); ++j) {
            const NodeId a = observed[i], b = observed[j];
            if (!g.adjacent(a, b) && !find_inducing_path(dag, a, b, latents)) continue;
            if (an[b].count(a))
                out.add_directed(i, j);
            else if (an[a].count(b))
                out.add_directed(j, i);
            else
                out.add_bidirected(i, j);
        }
    }
    return Mag(std::move(out));
}

NodeSet district(const MixedGraph& g, NodeId x) {
    require_node(g, x);
    NodeSet seen{x};
    std::vector<NodeId> stack{x};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : g.neighbors(v))
            if (g.is_bidirected(v, u) && seen.insert(u).second) stack.push_back(u);
    }
    return seen;
}

NodeSet graph_mmb(const Mag& mag, NodeId t) {
    const MixedGraph& g = mag.graph();
    require_node(g, t);
    NodeSet out = g.parents(t);
    const NodeSet kids = g.children(t);
    out.insert(kids.begin(), kids.end());

    NodeSet districts = district(g, t);
    for (NodeId c : kids) {
        const NodeSet pa = g.parents(c);
        out.insert(pa.begin(), pa.end());
        const NodeSet d = district(g, c);
        districts.insert(d.begin(), d.end());
    }
    for (NodeId d : districts) {
        out.insert(d);
        const NodeSet pa = g.parents(d);
        out.insert(pa.begin(), pa.end());
    }
    out.erase(t);
    return out;
}

bool is_maximal(const MixedGraph& g) {
    for (NodeId a = 0; a < g.size(); ++a) {
        for (NodeId b = a + 1; b < g.size(); ++b) {
            if (g.adjacent(a, b)) continue;
            NodeSet z = ancestors(g, NodeSet{a, b});
            z.erase(a);
            z.erase(b);
            if (!m_separated(g, a, b, z)) return false;
        }
    }
    return true;
}

}  // namespace mmbl
