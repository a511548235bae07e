#ifndef MMBL_METRICS_HPP_
#define MMBL_METRICS_HPP_

#include <string>
#include <vector>

#include "mmbl/driver.hpp"
#include "mmbl/graph.hpp"

namespace mmbl {

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double distance = 0.0;
    std::uint64_t n_tests = 0;
    std::vector<std::string> warnings;
};

/// Derives f1 and distance from precision and recall.
Metrics make_metrics(double precision, double recall, std::uint64_t n_tests = 0);

/// A predicted target edge and whether its presence and both marks agree with
/// the truth.
struct EdgeJudgment {
    std::string a;  // the target
    std::string b;
    Mark pred_at_a = Mark::Circle;
    Mark pred_at_b = Mark::Circle;
    bool in_truth = false;
    Mark truth_at_a = Mark::Circle;
    Mark truth_at_b = Mark::Circle;
    bool verdict = false;
};

/// Judges every edge at `target` in `pred`; nodes are matched by name.
std::vector<EdgeJudgment> judge_edges(const MixedGraph& pred, const MixedGraph& truth, const std::string& target);

/// Precision, recall, f1 and distance of the edges at the target, scored by
/// name against the truth PAG. An empty prediction or truth gives 0 for the
/// affected ratio and a warning.
Metrics score_edges(const MixedGraph& pred, const MixedGraph& truth, const std::string& target);
Metrics score_local(const LocalResult& pred, const Pag& truth, NodeId t);

}  // namespace mmbl

#endif  // MMBL_METRICS_HPP_
