#ifndef MMBL_TESTS_SUPPORT_HPP_
#define MMBL_TESTS_SUPPORT_HPP_

#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>
#include <string>

#include "mmbl/graph.hpp"
#include "mmbl/graph_io.hpp"
#include "mmbl/separation.hpp"
#include "mmbl/simgen.hpp"

namespace mmbl::testing {

inline std::string data_path(const std::string& file) { return std::string(MMBL_DATA_DIR) + "/" + file; }

/// A hidden-variable instance for the equivalence suites.
struct RandomInstance {
    Dag dag;
    NodeSet latents;
    std::vector<NodeId> observed;
    Mag mag;
    NodeId target;  // index into mag / observed
};

/// DAG with 8..15 nodes, mean degree in [1, 3], up to 3 latents among
/// multi-child nodes, uniformly chosen observed target.
inline RandomInstance random_instance(std::uint64_t seed, std::size_t min_nodes = 8, std::size_t max_nodes = 15,
                                      double max_degree = 3.0, std::size_t max_latents = 3) {
    Rng rng(seed);
    boost::random::uniform_int_distribution<std::size_t> nodes(min_nodes, max_nodes);
    boost::random::uniform_real_distribution<double> degree(1.0, max_degree);
    boost::random::uniform_int_distribution<std::size_t> n_latents(0, max_latents);
    const std::size_t n = nodes(rng);
    const double d = degree(rng);
    Dag dag = random_dag(n, d, rng());
    NodeSet latents = choose_latents(dag, n_latents(rng), rng());
    auto observed = observed_nodes(dag, latents);
    Mag mag = latent_project(dag, latents);
    boost::random::uniform_int_distribution<std::size_t> pick(0, observed.size() - 1);
    const NodeId t = pick(rng);
    return {std::move(dag), std::move(latents), std::move(observed), std::move(mag), t};
}

/// Random mixed graph: a random DAG plus random bidirected edges between
/// non-adjacent pairs.
inline MixedGraph random_mixed_graph(std::uint64_t seed, std::size_t max_nodes = 10) {
    Rng rng(seed);
    boost::random::uniform_int_distribution<std::size_t> nodes(2, max_nodes);
    boost::random::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n = nodes(rng);
    MixedGraph g = random_dag(n, 1.0 + 2.0 * unit(rng), rng()).graph();
    const double p_bi = 0.15 * unit(rng);
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b) && unit(rng) < p_bi) g.add_bidirected(a, b);
    return g;
}

}  // namespace mmbl::testing

#endif  // MMBL_TESTS_SUPPORT_HPP_
