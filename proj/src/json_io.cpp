#include "mmbl/json_io.hpp"

#include <fstream>

namespace mmbl {

using nlohmann::json;

namespace {

json names_of(const MixedGraph& g, const NodeSet& s) {
    json out = json::array();
    for (NodeId v : s) out.push_back(g.name(v));
    return out;
}

NodeId node_or_add(MixedGraph& g, const std::string& name) {
    if (auto v = g.find(name)) return *v;
    return g.add_node(name);
}

void read_edges(const json& edges, MixedGraph& g) {
    if (!edges.is_array()) throw FormatError("\"edges\" must be an array");
    for (const auto& e : edges) {
        const NodeId a = node_or_add(g, e.at("a").get<std::string>());
        const NodeId b = node_or_add(g, e.at("b").get<std::string>());
        if (a == b) throw FormatError("self-loop on " + g.name(a));
        g.set_edge(a, b, mark_from_string(e.at("mark_at_a").get<std::string>()),
                   mark_from_string(e.at("mark_at_b").get<std::string>()));
    }
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed JSON document: ") + e.what());
    } catch (const GraphError& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

json edges_to_json(const MixedGraph& g) {
    json out = json::array();
    for (auto [a, b] : g.edges())
        out.push_back({{"a", g.name(a)},
                       {"b", g.name(b)},
                       {"mark_at_a", to_string(g.mark_at(a, b))},
                       {"mark_at_b", to_string(g.mark_at(b, a))}});
    return out;
}

json result_to_json(const LocalResult& r) {
    const MixedGraph& g = r.p.graph();
    json j;
    j["target"] = g.name(r.target);
    j["nodes"] = g.names();
    j["edges"] = edges_to_json(g);
    j["stop_rule"] = to_string(r.stop_rule);
    j["n_tests"] = r.n_tests;
    json trace = json::array();
    for (NodeId v : r.trace) trace.push_back(g.name(v));
    j["trace"] = trace;
    j["parents"] = names_of(g, r.parents);
    j["children"] = names_of(g, r.children);
    j["bidirected"] = names_of(g, r.spouses_or_confounded);
    j["ambiguous"] = names_of(g, r.ambiguous);
    j["log"] = r.log;
    return j;
}

StoredResult result_from_json(const json& j) {
    return guarded([&] {
        StoredResult r;
        r.target = j.at("target").get<std::string>();
        if (j.contains("nodes"))
            for (const auto& n : j.at("nodes")) node_or_add(r.p, n.get<std::string>());
        node_or_add(r.p, r.target);
        read_edges(j.at("edges"), r.p);
        r.stop_rule = j.value("stop_rule", "");
        r.n_tests = j.value("n_tests", std::uint64_t{0});
        if (j.contains("trace")) r.trace = j.at("trace").get<std::vector<std::string>>();
        return r;
    });
}

json pag_to_json(const MixedGraph& g) { return {{"nodes", g.names()}, {"edges", edges_to_json(g)}}; }

MixedGraph pag_from_json(const json& j) {
    return guarded([&] {
        MixedGraph g;
        for (const auto& n : j.at("nodes")) node_or_add(g, n.get<std::string>());
        read_edges(j.at("edges"), g);
        return g;
    });
}

json metrics_to_json(const Metrics& m) {
    return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1},
            {"distance", m.distance},   {"n_tests", m.n_tests}, {"warnings", m.warnings}};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace mmbl
