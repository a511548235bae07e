#ifndef MMBL_SIMGEN_HPP_
#define MMBL_SIMGEN_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "mmbl/dataset.hpp"
#include "mmbl/graph.hpp"

namespace mmbl {

/// Engine used for every random draw in the library.
using Rng = std::mt19937_64;

/// Seed of substream `index` of `master` (splitmix64 finalizer over both).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Linear-Gaussian structural causal model over a DAG.
struct Scm {
    Dag dag;
    std::map<std::pair<NodeId, NodeId>, double> weights;  // (parent, child)
    std::vector<double> noise_std;
    std::uint64_t seed = 0;
};

/// Weights with uniform magnitude in [0.5, 1] and a fair-coin sign.
Scm parameterize(const Dag& dag, std::uint64_t seed, double noise_std = 1.0);

/// n ancestral samples; only the `observed` columns, in that order.
Dataset sample(const Scm& scm, std::size_t n, const std::vector<NodeId>& observed, std::uint64_t seed);

/// Random DAG named V1..Vn: each pair ordered by a random permutation gets an
/// edge with probability mean_degree / (n - 1).
Dag random_dag(std::size_t n_nodes, double mean_degree, std::uint64_t seed);

/// Up to k nodes drawn uniformly among those with at least two children.
NodeSet choose_latents(const Dag& dag, std::size_t k, std::uint64_t seed);

/// Node indices of `dag` outside `latents`, ascending.
std::vector<NodeId> observed_nodes(const Dag& dag, const NodeSet& latents);

}  // namespace mmbl

#endif  // MMBL_SIMGEN_HPP_
