#include <doctest.h>

#include <cmath>

#include "mmbl/driver.hpp"
#include "mmbl/graph_io.hpp"
#include "mmbl/metrics.hpp"
#include "mmbl/pag.hpp"
#include "support.hpp"

using namespace mmbl;
using namespace mmbl::testing;

TEST_CASE("metric formulas") {
    const Metrics perfect = make_metrics(1.0, 1.0);
    CHECK(perfect.f1 == 1.0);
    CHECK(perfect.distance == 0.0);

    const Metrics half = make_metrics(0.5, 1.0);
    CHECK(half.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(half.distance == doctest::Approx(0.5).epsilon(1e-12));

    const Metrics zero = make_metrics(0.0, 0.0, 7);
    CHECK(zero.f1 == 0.0);
    CHECK(zero.distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(zero.n_tests == 7);
}

TEST_CASE("distance is zero exactly at a perfect score") {
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j) {
            const double p = i / 10.0, r = j / 10.0;
            const Metrics m = make_metrics(p, r);
            CHECK((m.distance == 0.0) == (i == 10 && j == 10));
            const double f1 = p + r > 0 ? 2 * p * r / (p + r) : 0.0;
            CHECK(m.f1 == doctest::Approx(f1).epsilon(1e-12));
            CHECK(m.distance == doctest::Approx(std::hypot(1 - p, 1 - r)).epsilon(1e-12));
        }
}

TEST_CASE("edge judgments compare presence and both marks") {
    const MixedGraph truth = parse_graph("A -> T\nT <-> B\nT -> C\n");
    MixedGraph pred = parse_graph("A -> T\nT -> B\nT -> D\nnode C\n");
    const auto js = judge_edges(pred, truth, "T");
    REQUIRE(js.size() == 3);
    std::size_t right = 0;
    for (const auto& j : js) {
        CHECK(j.a == "T");
        if (j.b == "A") CHECK(j.verdict);
        if (j.b == "B") CHECK((j.in_truth && !j.verdict));
        if (j.b == "D") CHECK((!j.in_truth && !j.verdict));
        right += j.verdict;
    }
    CHECK(right == 1);
    const Metrics m = score_edges(pred, truth, "T");
    CHECK(m.precision == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(m.recall == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(m.warnings.empty());
}

TEST_CASE("circle marks are scored against the equivalence class") {
    MixedGraph truth({"T", "A"}), pred({"T", "A"});
    truth.set_edge(0, 1, Mark::Circle, Mark::Arrow);
    pred.set_edge(0, 1, Mark::Circle, Mark::Arrow);
    CHECK(score_edges(pred, truth, "T").f1 == 1.0);
    pred.set_edge(0, 1, Mark::Tail, Mark::Arrow);
    CHECK(score_edges(pred, truth, "T").f1 == 0.0);
}

TEST_CASE("empty prediction or truth warns") {
    const MixedGraph truth = parse_graph("A -> T\n");
    const MixedGraph empty = parse_graph("node A\nnode T\n");
    const Metrics m = score_edges(empty, truth, "T");
    CHECK(m.precision == 0.0);
    CHECK(m.recall == 0.0);
    CHECK(m.f1 == 0.0);
    CHECK(m.warnings.size() == 1);
    const Metrics n = score_edges(truth, empty, "T");
    CHECK(n.recall == 0.0);
    CHECK(n.warnings.size() == 1);
}

TEST_CASE("oracle run on the twelve-node network scores perfectly") {
    const Dag dag(read_graph_file(data_path("twelve_node.graph")));
    OracleBackend b(dag, dag.graph().ids({"V1", "V6"}));
    const NodeId t = b.mag().graph().id("V5");
    const LocalResult r = run_mmb_by_mmb(b, t);
    const Metrics m = score_local(r, pag_from_mag(b.mag()), t);
    CHECK(m.precision == 1.0);
    CHECK(m.recall == 1.0);
    CHECK(m.f1 == 1.0);
    CHECK(m.distance == 0.0);
    CHECK(m.n_tests == r.n_tests);
}
