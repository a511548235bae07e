#include <doctest.h>

#include "mmbl/graph_io.hpp"
#include "mmbl/separation.hpp"
#include "support.hpp"

using namespace mmbl;
using namespace mmbl::testing;

namespace {

Mag twelve_node_mag() {
    const Dag dag(read_graph_file(data_path("twelve_node.graph")));
    return latent_project(dag, dag.graph().ids({"V1", "V6"}));
}

// d-separation by moralization of the ancestral set, as an independent check
bool d_separated_moral(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z) {
    NodeSet keep = z;
    keep.insert(x);
    keep.insert(y);
    keep = ancestors(g, keep);
    std::vector<NodeSet> adj(g.size());
    for (NodeId v : keep) {
        const NodeSet pa = g.parents(v);
        for (NodeId p : pa) {
            adj[p].insert(v);
            adj[v].insert(p);
            for (NodeId q : pa)
                if (q != p) adj[p].insert(q);
        }
    }
    NodeSet seen{x};
    std::vector<NodeId> stack{x};
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : adj[v]) {
            if (!keep.count(u) || z.count(u) || !seen.insert(u).second) continue;
            if (u == y) return false;
            stack.push_back(u);
        }
    }
    return true;
}

}  // namespace

TEST_CASE("latent projection of the twelve-node network") {
    const Mag mag = twelve_node_mag();
    const MixedGraph expected = parse_graph(
        "node V2\nnode V3\nnode V4\nnode V5\nnode V7\nnode V8\nnode V9\nnode V10\nnode V11\nnode V12\n"
        "V11 -> V3\nV3 <-> V4\nV2 -> V4\nV2 -> V7\nV3 -> V10\nV4 -> V5\nV7 -> V8\nV5 -> V10\n"
        "V5 <-> V8\nV12 -> V8\nV8 -> V9\n");
    CHECK(mag.graph() == expected);
    CHECK(is_maximal(mag.graph()));
}

TEST_CASE("m-separation on the projected network") {
    const Mag mag = twelve_node_mag();
    const MixedGraph& g = mag.graph();
    CHECK(m_separated(mag, g.id("V4"), g.id("V8"), g.ids({"V7"})));
    CHECK_FALSE(m_separated(mag, g.id("V4"), g.id("V8"), g.ids({"V7", "V5"})));
    CHECK(m_separated(mag, g.id("V5"), g.id("V7"), g.ids({"V4"})));
    CHECK_FALSE(m_separated(mag, g.id("V3"), g.id("V5"), {}));
    CHECK_THROWS_AS(m_separated(mag, g.id("V3"), g.id("V3"), {}), GraphError);
    CHECK_THROWS_AS(m_separated(mag, g.id("V3"), g.id("V5"), g.ids({"V3"})), GraphError);
}

TEST_CASE("m-separation agrees with path enumeration on random mixed graphs") {
    for (std::uint64_t gi = 0; gi < 60; ++gi) {
        const MixedGraph g = random_mixed_graph(derive_seed(1, gi), 9);
        Rng rng(derive_seed(2, gi));
        boost::random::uniform_int_distribution<std::size_t> node(0, g.size() - 1);
        boost::random::uniform_int_distribution<int> coin(0, 1);
        for (int q = 0; q < 15; ++q) {
            const NodeId x = node(rng);
            NodeId y = node(rng);
            if (x == y) continue;
            NodeSet z;
            for (NodeId v = 0; v < g.size(); ++v)
                if (v != x && v != y && coin(rng)) z.insert(v);
            CHECK(m_separated(g, x, y, z) == m_separated_bruteforce(g, x, y, z));
        }
    }
}

TEST_CASE("on DAGs m-separation equals moral-graph d-separation") {
    for (std::uint64_t gi = 0; gi < 40; ++gi) {
        const Dag dag = random_dag(10, 2.5, derive_seed(3, gi));
        Rng rng(derive_seed(4, gi));
        boost::random::uniform_int_distribution<std::size_t> node(0, 9);
        boost::random::uniform_int_distribution<int> coin(0, 2);
        for (int q = 0; q < 20; ++q) {
            const NodeId x = node(rng), y = node(rng);
            if (x == y) continue;
            NodeSet z;
            for (NodeId v = 0; v < 10; ++v)
                if (v != x && v != y && coin(rng) == 0) z.insert(v);
            CHECK(m_separated(dag, x, y, z) == d_separated_moral(dag.graph(), x, y, z));
        }
    }
}

TEST_CASE("brute force refuses large graphs") {
    MixedGraph g;
    for (int i = 0; i < 13; ++i) g.add_node("N" + std::to_string(i));
    CHECK_THROWS_AS(m_separated_bruteforce(g, 0, 1, {}), GraphError);
}

TEST_CASE("inducing paths") {
    const Dag dag(read_graph_file(data_path("twelve_node.graph")));
    const MixedGraph& g = dag.graph();
    const NodeSet latents = g.ids({"V1", "V6"});
    const auto p = find_inducing_path(dag, g.id("V3"), g.id("V4"), latents);
    REQUIRE(p);
    CHECK(*p == std::vector<NodeId>{g.id("V3"), g.id("V1"), g.id("V4")});
    CHECK_FALSE(find_inducing_path(dag, g.id("V3"), g.id("V5"), latents));
    CHECK_THROWS_AS(find_inducing_path(dag, g.id("V1"), g.id("V5"), latents), GraphError);
}

TEST_CASE("projection adjacency matches the ancestral separation criterion") {
    for (std::uint64_t i = 0; i < 60; ++i) {
        const RandomInstance inst = random_instance(derive_seed(5, i), 6, 11, 3.0, 3);
        const MixedGraph& d = inst.dag.graph();
        const MixedGraph& m = inst.mag.graph();
        for (std::size_t a = 0; a < inst.observed.size(); ++a) {
            for (std::size_t b = a + 1; b < inst.observed.size(); ++b) {
                const NodeId x = inst.observed[a], y = inst.observed[b];
                NodeSet z;
                for (NodeId v : ancestors(d, NodeSet{x, y}))
                    if (!inst.latents.count(v) && v != x && v != y) z.insert(v);
                CHECK(m.adjacent(a, b) == !m_separated(inst.dag, x, y, z));
            }
        }
    }
}

TEST_CASE("projected graphs are maximal ancestral graphs with the same separations") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        const RandomInstance inst = random_instance(derive_seed(6, i), 6, 10, 3.0, 3);
        CHECK(is_maximal(inst.mag.graph()));
        Rng rng(derive_seed(7, i));
        const std::size_t n = inst.observed.size();
        boost::random::uniform_int_distribution<std::size_t> node(0, n - 1);
        boost::random::uniform_int_distribution<int> coin(0, 1);
        for (int q = 0; q < 20; ++q) {
            const NodeId x = node(rng), y = node(rng);
            if (x == y) continue;
            NodeSet z_obs, z_dag;
            for (NodeId v = 0; v < n; ++v)
                if (v != x && v != y && coin(rng)) {
                    z_obs.insert(v);
                    z_dag.insert(inst.observed[v]);
                }
            CHECK(m_separated(inst.mag, x, y, z_obs) ==
                  m_separated(inst.dag, inst.observed[x], inst.observed[y], z_dag));
        }
    }
}

TEST_CASE("non-maximal ancestral graph is detected") {
    const Mag g(parse_graph("X <-> Y\nY <-> Z\nZ <-> W\nY -> W\nZ -> X\n"));
    CHECK_FALSE(is_maximal(g.graph()));
}

TEST_CASE("graph blankets of the projected network") {
    const Mag mag = twelve_node_mag();
    const MixedGraph& g = mag.graph();
    CHECK(graph_mmb(mag, g.id("V5")) == g.ids({"V3", "V4", "V7", "V8", "V10", "V12"}));
    CHECK(graph_mmb(mag, g.id("V4")) == g.ids({"V2", "V3", "V5", "V7", "V8", "V11", "V12"}));
    CHECK(district(g, g.id("V5")) == g.ids({"V5", "V8"}));
}
