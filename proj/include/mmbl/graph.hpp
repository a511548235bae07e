#ifndef MMBL_GRAPH_HPP_
#define MMBL_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mmbl {

using NodeId = std::size_t;
using NodeSet = std::set<NodeId>;

/// Endpoint mark of an edge.
enum class Mark : std::uint8_t { Tail, Arrow, Circle };

std::string_view to_string(Mark m);
Mark mark_from_string(std::string_view s);

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Graph with at most one edge per unordered pair. Every edge carries a mark at
 * each of its two endpoints. Nodes are referred to by dense indices assigned
 * in insertion order; external names are kept alongside.
 */
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(std::vector<std::string> names);

    NodeId add_node(const std::string& name);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(NodeId v) const { return names_.at(v); }
    std::optional<NodeId> find(std::string_view name) const;
    /// Throws GraphError for unknown names.
    NodeId id(std::string_view name) const;
    NodeSet ids(const std::vector<std::string>& names) const;

    /// Adds or replaces the edge a-b with the given marks at a and at b.
    void set_edge(NodeId a, NodeId b, Mark at_a, Mark at_b);
    void add_directed(NodeId from, NodeId to) { set_edge(from, to, Mark::Tail, Mark::Arrow); }
    void add_bidirected(NodeId a, NodeId b) { set_edge(a, b, Mark::Arrow, Mark::Arrow); }
    void remove_edge(NodeId a, NodeId b);

    bool adjacent(NodeId a, NodeId b) const { return code(a, b) != 0; }
    /// Mark at endpoint `at` of the edge between `at` and `other`.
    Mark mark_at(NodeId at, NodeId other) const;
    /// Changes one endpoint mark of an existing edge.
    void set_mark(NodeId at, NodeId other, Mark m);

    /// Sorted neighbours.
    const std::vector<NodeId>& neighbors(NodeId v) const { return nbrs_.at(v); }
    std::size_t edge_count() const;

    bool is_directed(NodeId from, NodeId to) const {
        return adjacent(from, to) && mark_at(from, to) == Mark::Tail && mark_at(to, from) == Mark::Arrow;
    }
    bool is_bidirected(NodeId a, NodeId b) const {
        return adjacent(a, b) && mark_at(a, b) == Mark::Arrow && mark_at(b, a) == Mark::Arrow;
    }
    /// a *-> b
    bool into(NodeId a, NodeId b) const { return adjacent(a, b) && mark_at(b, a) == Mark::Arrow; }

    NodeSet parents(NodeId v) const;
    NodeSet children(NodeId v) const;
    NodeSet spouses(NodeId v) const;

    bool has_mark(Mark m) const;

    /// Induced subgraph; node order follows `keep` order, names preserved.
    MixedGraph induced(const std::vector<NodeId>& keep) const;

    /// Edges as (a, b) with a < b.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    bool operator==(const MixedGraph& other) const;

private:
    std::uint8_t code(NodeId a, NodeId b) const { return marks_[a * names_.size() + b]; }
    void check(NodeId v) const;
    void grow();

    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> index_;
    // marks_[a * n + b] = 0 when a,b not adjacent, else 1 + mark at b.
    std::vector<std::uint8_t> marks_;
    std::vector<std::vector<NodeId>> nbrs_;
};

/// A directed acyclic graph. Validated on construction.
class Dag {
public:
    explicit Dag(MixedGraph g);
    const MixedGraph& graph() const { return g_; }
    std::size_t size() const { return g_.size(); }
    /// Topological order (parents before children), ties broken by index.
    const std::vector<NodeId>& topological_order() const { return order_; }

private:
    MixedGraph g_;
    std::vector<NodeId> order_;
};

/// Maximal ancestral graph without selection bias: directed and bidirected
/// edges only, no directed or almost directed cycle. Maximality is checked
/// separately (see is_maximal) since it costs an m-separation query per
/// non-adjacent pair.
class Mag {
public:
    explicit Mag(MixedGraph g);
    const MixedGraph& graph() const { return g_; }
    std::size_t size() const { return g_.size(); }

private:
    MixedGraph g_;
};

/// Partial ancestral graph; any marks allowed.
class Pag {
public:
    Pag() = default;
    explicit Pag(MixedGraph g) : g_(std::move(g)) {}
    const MixedGraph& graph() const { return g_; }
    MixedGraph& graph() { return g_; }
    std::size_t size() const { return g_.size(); }

private:
    MixedGraph g_;
};

/// Returns a topological order of the directed part, or nullopt on a cycle.
std::optional<std::vector<NodeId>> topological_order(const MixedGraph& g);

}  // namespace mmbl

#endif  // MMBL_GRAPH_HPP_
