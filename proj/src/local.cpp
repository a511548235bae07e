#include "mmbl/local.hpp"

#include <algorithm>

namespace mmbl {

namespace {

// Calls f on each size-k subset of `pool` in lexicographic order until f
// returns true.
template <typename F>
bool for_each_subset(const std::vector<NodeId>& pool, std::size_t k, F&& f) {
    if (k > pool.size()) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        NodeSet s;
        for (std::size_t i : idx) s.insert(pool[i]);
        if (f(s)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

LocalStructure learn_skeleton(CiBackend& backend, const NodeSet& scope) {
    if (scope.empty()) throw CiError("local learning needs a non-empty scope");
    LocalStructure ls{scope, MixedGraph(backend.variables()), {}};
    for (NodeId v : scope)
        if (v >= backend.size()) throw CiError("scope member outside the backend variables");
    for (auto a = scope.begin(); a != scope.end(); ++a)
        for (auto b = std::next(a); b != scope.end(); ++b) ls.graph.set_edge(*a, *b, Mark::Circle, Mark::Circle);

    for (std::size_t level = 0;; ++level) {
        std::vector<std::vector<NodeId>> snapshot(backend.size());
        for (NodeId v : scope) snapshot[v] = ls.graph.neighbors(v);

        bool tested = false;
        for (NodeId a : scope) {
            for (NodeId b : snapshot[a]) {
                if (!ls.graph.adjacent(a, b)) continue;
                std::vector<NodeId> pool;
                for (NodeId v : snapshot[a])
                    if (v != b) pool.push_back(v);
                if (pool.size() < level) continue;
                tested = true;
                for_each_subset(pool, level, [&](const NodeSet& s) {
                    if (!backend.query(a, b, s).independent) return false;
                    ls.graph.remove_edge(a, b);
                    ls.sepsets.set(a, b, s);
                    return true;
                });
            }
        }
        if (!tested) break;
    }
    return ls;
}

LocalStructure orient_v_structures(LocalStructure ls) {
    MixedGraph& g = ls.graph;
    for (NodeId c : ls.scope) {
        const auto nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const NodeId a = nb[i], b = nb[j];
                if (g.adjacent(a, b)) continue;
                const NodeSet* s = ls.sepsets.find(a, b);
                if (!s) throw CiError("missing sepset for non-adjacent " + g.name(a) + ", " + g.name(b));
                if (s->count(c)) continue;
                g.set_mark(c, a, Mark::Arrow);
                g.set_mark(c, b, Mark::Arrow);
            }
        }
    }
    return ls;
}

LocalStructure restrict_structure(const LocalStructure& ls, const NodeSet& scope) {
    LocalStructure out{scope, MixedGraph(ls.graph.names()), {}};
    for (NodeId a : scope) {
        if (!ls.scope.count(a)) throw CiError("restriction scope is not a subset of the learned scope");
        for (NodeId b : scope) {
            if (a >= b) continue;
            if (ls.graph.adjacent(a, b))
                out.graph.set_edge(a, b, Mark::Circle, Mark::Circle);
            else if (const NodeSet* s = ls.sepsets.find(a, b))
                out.sepsets.set(a, b, *s);
        }
    }
    return orient_v_structures(std::move(out));
}

std::vector<SelectedEdge> select_pivot_info(const LocalStructure& ls, NodeId pivot) {
    const MixedGraph& g = ls.graph;
    std::vector<SelectedEdge> out;
    if (!ls.scope.count(pivot)) throw CiError("pivot outside the local scope");
    for (NodeId x : g.neighbors(pivot)) out.push_back({pivot, x, g.mark_at(pivot, x), g.mark_at(x, pivot)});

    std::vector<std::pair<NodeId, NodeId>> extra;
    for (NodeId c : g.neighbors(pivot)) {
        for (NodeId b : g.neighbors(c)) {
            if (b == pivot || g.adjacent(b, pivot)) continue;
            const NodeSet* s = ls.sepsets.find(pivot, b);
            if (!s || s->count(c)) continue;
            extra.emplace_back(b, c);
        }
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    for (auto [b, c] : extra) out.push_back({b, c, Mark::Circle, Mark::Arrow});
    return out;
}

}  // namespace mmbl
