#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mmbl/ci.hpp"
#include "mmbl/graph_io.hpp"
#include "mmbl/simgen.hpp"
#include "support.hpp"

using namespace mmbl;
using namespace mmbl::testing;

TEST_CASE("weights lie in the generating interval") {
    const Dag dag(read_graph_file(data_path("twelve_node.graph")));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Scm scm = parameterize(dag, seed);
        CHECK(scm.weights.size() == dag.graph().edge_count());
        for (const auto& [edge, w] : scm.weights) {
            CHECK(std::abs(w) >= 0.5);
            CHECK(std::abs(w) <= 1.0);
            CHECK(dag.graph().is_directed(edge.first, edge.second));
        }
        for (double s : scm.noise_std) CHECK(s == 1.0);
    }
}

TEST_CASE("parameterization is deterministic under its seed") {
    const Dag dag = random_dag(25, 3.0, 1);
    CHECK(parameterize(dag, 9).weights == parameterize(dag, 9).weights);
    CHECK(parameterize(dag, 9).weights != parameterize(dag, 10).weights);
    CHECK(parameterize(dag, 9, 2.5).noise_std.front() == 2.5);
    CHECK_THROWS(parameterize(dag, 9, 0.0));
}

TEST_CASE("about half the weight mass is positive") {
    const Dag dag = random_dag(450, 449.0, 3);  // complete: 101025 edges
    const Scm scm = parameterize(dag, 4);
    REQUIRE(scm.weights.size() >= 100000);
    std::size_t positive = 0;
    for (const auto& [edge, w] : scm.weights) positive += w > 0;
    const double frac = static_cast<double>(positive) / static_cast<double>(scm.weights.size());
    CHECK(std::abs(frac - 0.5) <= 0.01);
}

TEST_CASE("chain correlation matches the model") {
    Scm scm{Dag(parse_graph("x -> y\n")), {{{0, 1}, 0.8}}, {1.0, 1.0}, 0};
    const Dataset d = sample(scm, 100000, {0, 1}, 17);
    const auto& c = d.covariance();
    const double r = c(0, 1) / std::sqrt(c(0, 0) * c(1, 1));
    CHECK(std::abs(r - 0.8 / std::sqrt(1.64)) <= 0.01);
}

TEST_CASE("sample shape") {
    const Dag dag(read_graph_file(data_path("twelve_node.graph")));
    const Scm scm = parameterize(dag, 1);
    const NodeSet latents = dag.graph().ids({"V1", "V6"});
    const auto obs = observed_nodes(dag, latents);
    const Dataset one = sample(scm, 1, obs, 2);
    CHECK(one.rows() == 1);
    CHECK(one.cols() == 10);
    for (const auto& n : one.names()) CHECK((n != "V1" && n != "V6"));
    CHECK_THROWS(sample(scm, 0, obs, 2));

    std::ostringstream a, b;
    write_csv(a, sample(scm, 200, obs, 5));
    write_csv(b, sample(scm, 200, obs, 5));
    CHECK(a.str() == b.str());
}

TEST_CASE("random DAG structure") {
    CHECK(random_dag(30, 0.0, 1).graph().edge_count() == 0);
    CHECK_THROWS(random_dag(1, 1.0, 1));
    CHECK(random_dag(12, 2.0, 8).graph().edges() == random_dag(12, 2.0, 8).graph().edges());

    const std::size_t n = 20;
    const double degree = 3.0;
    double total = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) total += static_cast<double>(random_dag(n, degree, s).graph().edge_count());
    const double expected = n * degree / 2.0;
    CHECK(std::abs(total / 1000.0 - expected) <= 0.05 * expected);
}

TEST_CASE("latent choice") {
    const Dag dag(read_graph_file(data_path("twelve_node.graph")));
    for (std::uint64_t s = 0; s < 20; ++s) {
        const NodeSet l = choose_latents(dag, 2, s);
        CHECK(l.size() == 2);
        for (NodeId v : l) CHECK(dag.graph().children(v).size() >= 2);
        CHECK(choose_latents(dag, 2, s) == l);
    }
    CHECK(choose_latents(Dag(parse_graph("a -> b\n")), 3, 1).empty());
}

TEST_CASE("seed derivation separates streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("large-sample Fisher-z decisions agree with the oracle") {
    const Dag dag = random_dag(10, 2.5, 21);
    OracleBackend oracle(dag, {});
    const auto obs = observed_nodes(dag, {});
    const Dataset d = sample(parameterize(dag, 22), 50000, obs, 23);
    FisherZBackend fz(d, 0.01);
    std::size_t agree = 0, total = 0;
    for (NodeId x = 0; x < 10; ++x)
        for (NodeId y = x + 1; y < 10; ++y) {
            std::vector<NodeSet> zs{{}};
            for (NodeId z = 0; z < 10; ++z)
                if (z != x && z != y) zs.push_back({z});
            for (const auto& z : zs) {
                ++total;
                agree += oracle.query(x, y, z).independent == fz.query(x, y, z).independent;
            }
        }
    CHECK(total == 45 * 9);
    CHECK(static_cast<double>(agree) >= 0.95 * static_cast<double>(total));
}
