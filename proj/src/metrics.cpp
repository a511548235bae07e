#include "mmbl/metrics.hpp"

#include <cmath>

namespace mmbl {

Metrics make_metrics(double precision, double recall, std::uint64_t n_tests) {
    Metrics m;
    m.precision = precision;
    m.recall = recall;
    m.f1 = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
    m.distance = std::sqrt((1 - recall) * (1 - recall) + (1 - precision) * (1 - precision));
    m.n_tests = n_tests;
    return m;
}

std::vector<EdgeJudgment> judge_edges(const MixedGraph& pred, const MixedGraph& truth, const std::string& target) {
    const NodeId pt = pred.id(target);
    const auto tt = truth.find(target);
    std::vector<EdgeJudgment> out;
    for (NodeId x : pred.neighbors(pt)) {
        EdgeJudgment j;
        j.a = target;
        j.b = pred.name(x);
        j.pred_at_a = pred.mark_at(pt, x);
        j.pred_at_b = pred.mark_at(x, pt);
        const auto tx = truth.find(j.b);
        if (tt && tx && truth.adjacent(*tt, *tx)) {
            j.in_truth = true;
            j.truth_at_a = truth.mark_at(*tt, *tx);
            j.truth_at_b = truth.mark_at(*tx, *tt);
            j.verdict = j.pred_at_a == j.truth_at_a && j.pred_at_b == j.truth_at_b;
        }
        out.push_back(j);
    }
    return out;
}

Metrics score_edges(const MixedGraph& pred, const MixedGraph& truth, const std::string& target) {
    const auto judged = judge_edges(pred, truth, target);
    std::size_t correct = 0;
    for (const auto& j : judged) correct += j.verdict;
    const auto tt = truth.find(target);
    const std::size_t n_truth = tt ? truth.neighbors(*tt).size() : 0;

    std::vector<std::string> warnings;
    double precision = 0.0, recall = 0.0;
    if (judged.empty())
        warnings.push_back("empty prediction at " + target);
    else
        precision = static_cast<double>(correct) / static_cast<double>(judged.size());
    if (n_truth == 0)
        warnings.push_back("no true edges at " + target);
    else
        recall = static_cast<double>(correct) / static_cast<double>(n_truth);
    Metrics m = make_metrics(precision, recall);
    m.warnings = std::move(warnings);
    return m;
}

Metrics score_local(const LocalResult& pred, const Pag& truth, NodeId t) {
    Metrics m = score_edges(pred.p.graph(), truth.graph(), truth.graph().name(t));
    m.n_tests = pred.n_tests;
    return m;
}

}  // namespace mmbl
