#include "mmbl/simgen.hpp"

#include <algorithm>
#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>
#include <stdexcept>

namespace mmbl {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(master) ^ (index + 0x632be59bd9b4e019ULL));
}

Scm parameterize(const Dag& dag, std::uint64_t seed, double noise_std) {
    if (!(noise_std > 0)) throw std::invalid_argument("noise_std must be positive");
    Rng rng(seed);
    boost::random::uniform_real_distribution<double> magnitude(0.5, 1.0);
    boost::random::bernoulli_distribution<double> negative(0.5);

    Scm scm{dag, {}, std::vector<double>(dag.size(), noise_std), seed};
    const MixedGraph& g = dag.graph();
    for (NodeId child : dag.topological_order()) {
        for (NodeId parent : g.parents(child)) {
            const double w = magnitude(rng);
            scm.weights[{parent, child}] = negative(rng) ? -w : w;
        }
    }
    return scm;
}

Dataset sample(const Scm& scm, std::size_t n, const std::vector<NodeId>& observed, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample size must be at least 1");
    const MixedGraph& g = scm.dag.graph();
    for (NodeId v : observed)
        if (v >= g.size()) throw std::invalid_argument("observed node out of range");

    Rng rng(seed);
    boost::random::normal_distribution<double> normal(0.0, 1.0);
    const auto& order = scm.dag.topological_order();
    std::vector<std::vector<std::pair<NodeId, double>>> in(g.size());
    for (const auto& [edge, w] : scm.weights) in[edge.second].emplace_back(edge.first, w);

    Eigen::MatrixXd rows(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(observed.size()));
    std::vector<double> v(g.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (NodeId node : order) {
            double x = scm.noise_std[node] * normal(rng);
            for (const auto& [pa, w] : in[node]) x += w * v[pa];
            v[node] = x;
        }
        for (std::size_t c = 0; c < observed.size(); ++c)
            rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[observed[c]];
    }
    std::vector<std::string> names;
    for (NodeId o : observed) names.push_back(g.name(o));
    return Dataset(std::move(names), std::move(rows));
}

Dag random_dag(std::size_t n_nodes, double mean_degree, std::uint64_t seed) {
    if (n_nodes < 2) throw std::invalid_argument("random DAG needs at least two nodes");
    if (mean_degree < 0) throw std::invalid_argument("mean degree must be non-negative");
    Rng rng(seed);
    std::vector<NodeId> order(n_nodes);
    for (NodeId i = 0; i < n_nodes; ++i) order[i] = i;
    for (std::size_t i = n_nodes - 1; i > 0; --i) {
        boost::random::uniform_int_distribution<std::size_t> pick(0, i);
        std::swap(order[i], order[pick(rng)]);
    }
    const double p = std::min(1.0, mean_degree / static_cast<double>(n_nodes - 1));
    boost::random::uniform_real_distribution<double> unit(0.0, 1.0);

    MixedGraph g;
    for (std::size_t i = 0; i < n_nodes; ++i) g.add_node("V" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n_nodes; ++i)
        for (std::size_t j = i + 1; j < n_nodes; ++j)
            if (unit(rng) < p) g.add_directed(order[i], order[j]);
    return Dag(std::move(g));
}

NodeSet choose_latents(const Dag& dag, std::size_t k, std::uint64_t seed) {
    std::vector<NodeId> pool;
    for (NodeId v = 0; v < dag.size(); ++v)
        if (dag.graph().children(v).size() >= 2) pool.push_back(v);
    Rng rng(seed);
    NodeSet out;
    for (std::size_t i = 0; i < k && i < pool.size(); ++i) {
        boost::random::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
        out.insert(pool[i]);
    }
    return out;
}

std::vector<NodeId> observed_nodes(const Dag& dag, const NodeSet& latents) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < dag.size(); ++v)
        if (!latents.count(v)) out.push_back(v);
    return out;
}

}  // namespace mmbl
