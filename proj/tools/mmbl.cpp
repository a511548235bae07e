#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "mmbl/ci.hpp"
#include "mmbl/dataset.hpp"
#include "mmbl/driver.hpp"
#include "mmbl/experiment.hpp"
#include "mmbl/graph_io.hpp"
#include "mmbl/json_io.hpp"
#include "mmbl/metrics.hpp"
#include "mmbl/pag.hpp"
#include "mmbl/separation.hpp"
#include "mmbl/simgen.hpp"

using namespace mmbl;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

NodeSet lookup_latents(const Dag& dag, const std::string& list) {
    NodeSet out;
    for (const auto& name : split_names(list)) out.insert(dag.graph().id(name));
    return out;
}

void emit(const json& j, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(out, j);
}

// A network file holds a DAG, or a MAG when it has bidirected edges; a MAG
// takes no hidden nodes.
Mag load_mag(const std::string& path, const std::string& latents) {
    MixedGraph g = read_graph_file(path);
    bool bidirected = false;
    for (auto [a, b] : g.edges()) bidirected |= g.is_bidirected(a, b);
    if (bidirected) {
        if (!split_names(latents).empty()) throw UsageError("hidden nodes given for a network with bidirected edges");
        return Mag(std::move(g));
    }
    const Dag dag(std::move(g));
    return latent_project(dag, lookup_latents(dag, latents));
}

int fail(int code, const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local causal structure learning around a target variable"};
    app.require_subcommand(1);

    std::string net, latents, out, data, target, pred, truth, spec;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double alpha = 0.05, noise_std = 1.0;

    auto* gen = app.add_subcommand("generate", "sample a linear-Gaussian dataset from a network");
    gen->add_option("--net", net, "network file")->required();
    gen->add_option("--latents", latents, "comma-separated hidden nodes");
    gen->add_option("--n", n, "number of rows")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--noise-std", noise_std, "noise standard deviation")->check(CLI::PositiveNumber);
    gen->add_option("--out", out, "output CSV")->required();

    auto* run = app.add_subcommand("run", "learn the local structure from data");
    run->add_option("--data", data, "input CSV")->required();
    run->add_option("--target", target, "target column")->required();
    run->add_option("--alpha", alpha, "significance level")->check(CLI::Range(0.0, 1.0));
    run->add_option("--out", out, "result JSON (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "learn the local structure with an m-separation oracle");
    oracle->add_option("--net", net, "network file")->required();
    oracle->add_option("--latents", latents, "comma-separated hidden nodes");
    oracle->add_option("--target", target, "target node")->required();
    oracle->add_option("--out", out, "result JSON (default stdout)");

    auto* tru = app.add_subcommand("truth", "write the PAG of the network's latent projection");
    tru->add_option("--net", net, "network file")->required();
    tru->add_option("--latents", latents, "comma-separated hidden nodes");
    tru->add_option("--out", out, "PAG JSON (default stdout)");

    auto* ev = app.add_subcommand("eval", "score a result against a PAG at the target");
    ev->add_option("--pred", pred, "result JSON")->required();
    ev->add_option("--truth", truth, "PAG JSON")->required();
    ev->add_option("--target", target, "target node (default: the result's)");

    auto* bench = app.add_subcommand("bench", "run a finite-sample sweep");
    bench->add_option("--spec", spec, "experiment spec JSON")->required();
    bench->add_option("--out", out, "report CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(1, "usage", e.what());
    }

    try {
        if (*gen) {
            const Dag dag(read_graph_file(net));
            const NodeSet hidden = lookup_latents(dag, latents);
            const Scm scm = parameterize(dag, derive_seed(seed, 0), noise_std);
            write_csv_file(out, sample(scm, n, observed_nodes(dag, hidden), derive_seed(seed, 1)));
        } else if (*run) {
            const Dataset d = read_csv_file(data);
            FisherZBackend backend(d, alpha);
            emit(result_to_json(run_mmb_by_mmb(backend, d.column(target))), out);
        } else if (*oracle) {
            OracleBackend backend(load_mag(net, latents));
            const auto t = backend.mag().graph().find(target);
            if (!t) throw std::invalid_argument("target " + target + " is not an observed node");
            emit(result_to_json(run_mmb_by_mmb(backend, *t)), out);
        } else if (*tru) {
            emit(pag_to_json(pag_from_mag(load_mag(net, latents)).graph()), out);
        } else if (*ev) {
            const StoredResult r = result_from_json(read_json_file(pred));
            const MixedGraph t = pag_from_json(read_json_file(truth));
            const std::string name = target.empty() ? r.target : target;
            if (!t.find(name)) throw std::invalid_argument("target " + name + " is not in the truth PAG");
            Metrics m = score_edges(r.p, t, name);
            m.n_tests = r.n_tests;
            std::cout << metrics_to_json(m).dump(2) << '\n';
        } else if (*bench) {
            const auto rows = run_bench(read_spec_file(spec));
            if (out.empty() || out == "-") {
                write_report(std::cout, rows);
            } else {
                std::ofstream f(out);
                if (!f) throw FormatError("cannot write " + out);
                write_report(f, rows);
            }
        }
    } catch (const UsageError& e) {
        return fail(1, "usage", e.what());
    } catch (const std::exception& e) {
        return fail(2, "data", e.what());
    }
    return 0;
}
