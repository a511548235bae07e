#ifndef MMBL_EXPERIMENT_HPP_
#define MMBL_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mmbl/graph.hpp"

namespace mmbl {

/// A finite-sample sweep: repetitions x sample sizes x targets.
struct ExperimentSpec {
    // Either a network file or a random network.
    std::optional<std::filesystem::path> network;
    std::size_t random_nodes = 0;
    double random_mean_degree = 2.0;
    std::uint64_t random_seed = 0;

    std::vector<std::string> latents;
    std::size_t n_latents = 0;  // used when `latents` is empty

    std::vector<std::string> targets;
    std::size_t n_targets = 1;  // used when `targets` is empty
    std::size_t min_target_degree = 1;

    std::vector<std::size_t> sample_sizes;
    std::size_t repetitions = 1;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    double noise_std = 1.0;
    std::size_t threads = 0;  // 0: hardware concurrency
};

/// Parses the JSON spec; a relative network path is taken relative to `base`.
ExperimentSpec parse_spec(const nlohmann::json& j, const std::filesystem::path& base = {});
ExperimentSpec read_spec_file(const std::filesystem::path& path);

/// The resolved setting of a spec: network, hidden nodes and targets.
struct Instance {
    Dag dag;
    NodeSet latents;
    std::vector<NodeId> targets;  // DAG indices
};
Instance resolve_instance(const ExperimentSpec& spec);

struct ReportRow {
    std::string target;
    std::string algorithm;
    std::size_t size = 0;
    double precision_mean = 0, precision_std = 0;
    double recall_mean = 0, recall_std = 0;
    double f1_mean = 0, f1_std = 0;
    double distance_mean = 0, distance_std = 0;
    double ntest_mean = 0, ntest_std = 0;
    std::size_t errors = 0;  // repetitions whose run threw
};

/// Runs the sweep. Repetitions run concurrently; rows are ordered by target
/// then sample size and depend only on the spec.
std::vector<ReportRow> run_bench(const ExperimentSpec& spec);

void write_report(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace mmbl

#endif  // MMBL_EXPERIMENT_HPP_
