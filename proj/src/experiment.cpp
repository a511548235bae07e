#include "mmbl/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <mutex>
#include <thread>

#include "mmbl/ci.hpp"
#include "mmbl/driver.hpp"
#include "mmbl/graph_io.hpp"
#include "mmbl/json_io.hpp"
#include "mmbl/metrics.hpp"
#include "mmbl/pag.hpp"
#include "mmbl/separation.hpp"
#include "mmbl/simgen.hpp"

namespace mmbl {

using nlohmann::json;

ExperimentSpec parse_spec(const json& j, const std::filesystem::path& base) {
    try {
        ExperimentSpec s;
        if (j.contains("network")) {
            std::filesystem::path p = j.at("network").get<std::string>();
            s.network = p.is_relative() && !base.empty() ? base / p : p;
        } else if (j.contains("random_network")) {
            const auto& r = j.at("random_network");
            s.random_nodes = r.at("nodes").get<std::size_t>();
            s.random_mean_degree = r.value("mean_degree", 2.0);
            s.random_seed = r.value("seed", std::uint64_t{0});
        } else {
            throw FormatError("spec needs \"network\" or \"random_network\"");
        }
        s.latents = j.value("latents", std::vector<std::string>{});
        s.n_latents = j.value("n_latents", std::size_t{0});
        if (j.contains("target")) s.targets.push_back(j.at("target").get<std::string>());
        if (j.contains("targets")) s.targets = j.at("targets").get<std::vector<std::string>>();
        s.n_targets = j.value("n_targets", std::size_t{1});
        s.min_target_degree = j.value("min_target_degree", std::size_t{1});
        s.sample_sizes = j.at("sample_sizes").get<std::vector<std::size_t>>();
        s.repetitions = j.value("repetitions", std::size_t{1});
        s.seed = j.value("seed", std::uint64_t{0});
        s.alpha = j.value("alpha", 0.05);
        s.noise_std = j.value("noise_std", 1.0);
        s.threads = j.value("threads", std::size_t{0});
        if (s.sample_sizes.empty()) throw FormatError("\"sample_sizes\" is empty");
        for (auto n : s.sample_sizes)
            if (n < 1) throw FormatError("sample sizes must be positive");
        if (s.repetitions < 1) throw FormatError("\"repetitions\" must be positive");
        if (!(s.alpha > 0 && s.alpha < 1)) throw FormatError("\"alpha\" must lie in (0, 1)");
        if (!(s.noise_std > 0)) throw FormatError("\"noise_std\" must be positive");
        return s;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed spec: ") + e.what());
    }
}

ExperimentSpec read_spec_file(const std::filesystem::path& path) {
    return parse_spec(read_json_file(path), path.parent_path());
}

Instance resolve_instance(const ExperimentSpec& spec) {
    Dag dag = spec.network ? Dag(read_graph_file(*spec.network))
                           : random_dag(spec.random_nodes, spec.random_mean_degree, spec.random_seed);
    NodeSet latents;
    if (!spec.latents.empty()) {
        for (const auto& name : spec.latents) latents.insert(dag.graph().id(name));
    } else {
        latents = choose_latents(dag, spec.n_latents, derive_seed(spec.seed, 0x1a7e));
        if (latents.size() < spec.n_latents)
            throw FormatError("network has fewer than " + std::to_string(spec.n_latents) +
                              " nodes with two or more children");
    }

    std::vector<NodeId> targets;
    if (!spec.targets.empty()) {
        for (const auto& name : spec.targets) {
            const NodeId t = dag.graph().id(name);
            if (latents.count(t)) throw FormatError("target " + name + " is latent");
            targets.push_back(t);
        }
    } else {
        const Mag mag = latent_project(dag, latents);
        const auto obs = observed_nodes(dag, latents);
        std::vector<NodeId> pool;
        for (std::size_t i = 0; i < obs.size(); ++i)
            if (mag.graph().neighbors(i).size() >= spec.min_target_degree) pool.push_back(obs[i]);
        if (pool.size() < spec.n_targets) throw FormatError("not enough observed nodes of the requested degree");
        Rng rng(derive_seed(spec.seed, 0x7a59));
        std::shuffle(pool.begin(), pool.end(), rng);
        targets.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(spec.n_targets));
        std::sort(targets.begin(), targets.end());
    }
    return {std::move(dag), std::move(latents), std::move(targets)};
}

namespace {

struct Cell {
    Metrics m;
    bool error = false;
};

std::pair<double, double> mean_std(const std::vector<double>& xs) {
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var = xs.size() > 1 ? var / static_cast<double>(xs.size() - 1) : 0.0;
    return {mean, std::sqrt(var)};
}

}  // namespace

std::vector<ReportRow> run_bench(const ExperimentSpec& spec) {
    const Instance inst = resolve_instance(spec);
    const auto observed = observed_nodes(inst.dag, inst.latents);
    const Mag mag = latent_project(inst.dag, inst.latents);
    const Pag truth = pag_from_mag(mag);

    // index into the observed list, which is also the backend index
    std::vector<NodeId> local_target;
    for (NodeId t : inst.targets)
        local_target.push_back(static_cast<NodeId>(std::find(observed.begin(), observed.end(), t) - observed.begin()));

    const std::size_t n_t = inst.targets.size(), n_s = spec.sample_sizes.size(), reps = spec.repetitions;
    std::vector<Cell> cells(reps * n_s * n_t);
    auto cell = [&](std::size_t rep, std::size_t s, std::size_t t) -> Cell& { return cells[(rep * n_s + s) * n_t + t]; };

    auto run_rep = [&](std::size_t rep) {
        const std::uint64_t rep_seed = derive_seed(spec.seed, rep);
        const Scm scm = parameterize(inst.dag, derive_seed(rep_seed, 0), spec.noise_std);
        for (std::size_t s = 0; s < n_s; ++s) {
            const Dataset data = sample(scm, spec.sample_sizes[s], observed, derive_seed(rep_seed, s + 1));
            for (std::size_t t = 0; t < n_t; ++t) {
                Cell& c = cell(rep, s, t);
                FisherZBackend backend(data, spec.alpha);
                try {
                    const LocalResult r = run_mmb_by_mmb(backend, local_target[t]);
                    c.m = score_local(r, truth, local_target[t]);
                } catch (const std::exception&) {
                    c.m = make_metrics(0.0, 0.0, backend.n_tests());
                    c.error = true;
                }
            }
        }
    };

    std::size_t threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, reps);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (std::size_t i = 0; i < threads; ++i) {
        pool.emplace_back([&] {
            for (std::size_t rep = next++; rep < reps; rep = next++) {
                try {
                    run_rep(rep);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<ReportRow> rows;
    for (std::size_t t = 0; t < n_t; ++t) {
        for (std::size_t s = 0; s < n_s; ++s) {
            std::vector<double> p, r, f, d, nt;
            ReportRow row;
            row.target = inst.dag.graph().name(inst.targets[t]);
            row.algorithm = "MMB-by-MMB";
            row.size = spec.sample_sizes[s];
            for (std::size_t rep = 0; rep < reps; ++rep) {
                const Cell& c = cell(rep, s, t);
                p.push_back(c.m.precision);
                r.push_back(c.m.recall);
                f.push_back(c.m.f1);
                d.push_back(c.m.distance);
                nt.push_back(static_cast<double>(c.m.n_tests));
                row.errors += c.error;
            }
            std::tie(row.precision_mean, row.precision_std) = mean_std(p);
            std::tie(row.recall_mean, row.recall_std) = mean_std(r);
            std::tie(row.f1_mean, row.f1_std) = mean_std(f);
            std::tie(row.distance_mean, row.distance_std) = mean_std(d);
            std::tie(row.ntest_mean, row.ntest_std) = mean_std(nt);
            rows.push_back(row);
        }
    }
    return rows;
}

void write_report(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "target,algorithm,size,precision_mean,precision_std,recall_mean,recall_std,f1_mean,f1_std,"
           "distance_mean,distance_std,ntest_mean,ntest_std,errors\n";
    char buf[64];
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.6f", x);
        return std::string(buf);
    };
    for (const auto& r : rows) {
        out << r.target << ',' << r.algorithm << ',' << r.size << ',' << num(r.precision_mean) << ','
            << num(r.precision_std) << ',' << num(r.recall_mean) << ',' << num(r.recall_std) << ','
            << num(r.f1_mean) << ',' << num(r.f1_std) << ',' << num(r.distance_mean) << ',' << num(r.distance_std)
            << ',' << num(r.ntest_mean) << ',' << num(r.ntest_std) << ',' << r.errors << '\n';
    }
}

}  // namespace mmbl
