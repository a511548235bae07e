#include "mmbl/graph.hpp"

#include <algorithm>
#include <queue>

#include "mmbl/separation.hpp"

namespace mmbl {

std::string_view to_string(Mark m) {
    switch (m) {
        case Mark::Tail: return "tail";
        case Mark::Arrow: return "arrow";
        case Mark::Circle: return "circle";
    }
    return "?";
}

Mark mark_from_string(std::string_view s) {
    if (s == "tail") return Mark::Tail;
    if (s == "arrow") return Mark::Arrow;
    if (s == "circle") return Mark::Circle;
    throw GraphError("unknown mark '" + std::string(s) + "'");
}

MixedGraph::MixedGraph(std::vector<std::string> names) {
    for (auto& n : names) add_node(n);
}

NodeId MixedGraph::add_node(const std::string& name) {
    if (name.empty()) throw GraphError("empty node name");
    if (index_.count(name)) throw GraphError("duplicate node '" + name + "'");
    NodeId id = names_.size();
    names_.push_back(name);
    index_.emplace(name, id);
    nbrs_.emplace_back();
    grow();
    return id;
}

void MixedGraph::grow() {
    const std::size_t n = names_.size();
    std::vector<std::uint8_t> next(n * n, 0);
    const std::size_t old = n - 1;
    for (std::size_t a = 0; a < old; ++a)
        for (std::size_t b = 0; b < old; ++b) next[a * n + b] = marks_[a * old + b];
    marks_ = std::move(next);
}

std::optional<NodeId> MixedGraph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeId MixedGraph::id(std::string_view name) const {
    auto v = find(name);
    if (!v) throw GraphError("unknown node '" + std::string(name) + "'");
    return *v;
}

NodeSet MixedGraph::ids(const std::vector<std::string>& names) const {
    NodeSet out;
    for (const auto& n : names) out.insert(id(n));
    return out;
}

void MixedGraph::check(NodeId v) const {
    if (v >= names_.size()) throw GraphError("node index " + std::to_string(v) + " out of range");
}

void MixedGraph::set_edge(NodeId a, NodeId b, Mark at_a, Mark at_b) {
    check(a);
    check(b);
    if (a == b) throw GraphError("self-loop on '" + names_[a] + "'");
    const std::size_t n = names_.size();
    if (!adjacent(a, b)) {
        auto ins = [](std::vector<NodeId>& v, NodeId x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); };
        ins(nbrs_[a], b);
        ins(nbrs_[b], a);
    }
    marks_[a * n + b] = static_cast<std::uint8_t>(1 + static_cast<int>(at_b));
    marks_[b * n + a] = static_cast<std::uint8_t>(1 + static_cast<int>(at_a));
}

void MixedGraph::remove_edge(NodeId a, NodeId b) {
    check(a);
    check(b);
    if (!adjacent(a, b)) return;
    const std::size_t n = names_.size();
    marks_[a * n + b] = 0;
    marks_[b * n + a] = 0;
    auto del = [](std::vector<NodeId>& v, NodeId x) { v.erase(std::lower_bound(v.begin(), v.end(), x)); };
    del(nbrs_[a], b);
    del(nbrs_[b], a);
}

Mark MixedGraph::mark_at(NodeId at, NodeId other) const {
    check(at);
    check(other);
    auto c = code(other, at);
    if (c == 0) throw GraphError("no edge between '" + names_[at] + "' and '" + names_[other] + "'");
    return static_cast<Mark>(c - 1);
}

void MixedGraph::set_mark(NodeId at, NodeId other, Mark m) {
    if (!adjacent(at, other))
        throw GraphError("no edge between '" + names_[at] + "' and '" + names_[other] + "'");
    marks_[other * names_.size() + at] = static_cast<std::uint8_t>(1 + static_cast<int>(m));
}

std::size_t MixedGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& v : nbrs_) total += v.size();
    return total / 2;
}

NodeSet MixedGraph::parents(NodeId v) const {
    NodeSet out;
    for (NodeId u : neighbors(v))
        if (is_directed(u, v)) out.insert(u);
    return out;
}

NodeSet MixedGraph::children(NodeId v) const {
    NodeSet out;
    for (NodeId u : neighbors(v))
        if (is_directed(v, u)) out.insert(u);
    return out;
}

NodeSet MixedGraph::spouses(NodeId v) const {
    NodeSet out;
    for (NodeId u : neighbors(v))
        if (is_bidirected(v, u)) out.insert(u);
    return out;
}

bool MixedGraph::has_mark(Mark m) const {
    for (NodeId a = 0; a < size(); ++a)
        for (NodeId b : nbrs_[a])
            if (mark_at(b, a) == m) return true;
    return false;
}

MixedGraph MixedGraph::induced(const std::vector<NodeId>& keep) const {
    MixedGraph out;
    for (NodeId v : keep) out.add_node(names_.at(v));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                out.set_edge(i, j, mark_at(keep[i], keep[j]), mark_at(keep[j], keep[i]));
    return out;
}

std::vector<std::pair<NodeId, NodeId>> MixedGraph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (NodeId a = 0; a < size(); ++a)
        for (NodeId b : nbrs_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

bool MixedGraph::operator==(const MixedGraph& other) const {
    return names_ == other.names_ && marks_ == other.marks_;
}

std::optional<std::vector<NodeId>> topological_order(const MixedGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> indeg(n, 0);
    for (NodeId v = 0; v < n; ++v) indeg[v] = g.parents(v).size();
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<NodeId> order;
    while (!ready.empty()) {
        NodeId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (NodeId c : g.children(v))
            if (--indeg[c] == 0) ready.push(c);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

Dag::Dag(MixedGraph g) : g_(std::move(g)) {
    for (auto [a, b] : g_.edges())
        if (!g_.is_directed(a, b) && !g_.is_directed(b, a))
            throw GraphError("DAG edge '" + g_.name(a) + "' - '" + g_.name(b) + "' is not directed");
    auto order = mmbl::topological_order(g_);
    if (!order) throw GraphError("graph has a directed cycle");
    order_ = std::move(*order);
}

Mag::Mag(MixedGraph g) : g_(std::move(g)) {
    for (auto [a, b] : g_.edges()) {
        const Mark ma = g_.mark_at(a, b), mb = g_.mark_at(b, a);
        if (ma == Mark::Circle || mb == Mark::Circle)
            throw GraphError("MAG edge '" + g_.name(a) + "' - '" + g_.name(b) + "' has a circle mark");
        if (ma == Mark::Tail && mb == Mark::Tail)
            throw GraphError("undirected edge '" + g_.name(a) + "' - '" + g_.name(b) +
                             "': selection bias is not supported");
    }
    if (!topological_order(g_)) throw GraphError("graph has a directed cycle");
    for (auto [a, b] : g_.edges()) {
        if (!g_.is_bidirected(a, b)) continue;
        if (ancestors(g_, a).count(b) || ancestors(g_, b).count(a))
            throw GraphError("almost directed cycle through '" + g_.name(a) + "' <-> '" + g_.name(b) + "'");
    }
}

}  // namespace mmbl
