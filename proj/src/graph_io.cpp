#include "mmbl/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace mmbl {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

NodeId intern(MixedGraph& g, const std::string& name) {
    if (auto v = g.find(name)) return *v;
    return g.add_node(name);
}

}  // namespace

MixedGraph parse_graph(std::istream& in) {
    MixedGraph g;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        std::istringstream ls(line);
        std::string a, op, b, extra;
        ls >> a >> op;
        if (a == "node") {
            if (op.empty() || (ls >> extra)) throw GraphError("line " + std::to_string(lineno) + ": expected 'node NAME'");
            intern(g, op);
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw GraphError("line " + std::to_string(lineno) + ": expected 'A -> B' or 'A <-> B'");
        const NodeId ia = intern(g, a), ib = intern(g, b);
        if (g.adjacent(ia, ib)) throw GraphError("line " + std::to_string(lineno) + ": duplicate edge " + a + " - " + b);
        if (op == "->")
            g.add_directed(ia, ib);
        else if (op == "<->")
            g.add_bidirected(ia, ib);
        else
            throw GraphError("line " + std::to_string(lineno) + ": unknown edge operator '" + op + "'");
    }
    return g;
}

MixedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

MixedGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file " + path.string());
    return parse_graph(in);
}

std::string format_edge(const MixedGraph& g, NodeId a, NodeId b) {
    auto left = [](Mark m) {
        switch (m) {
            case Mark::Tail: return "-";
            case Mark::Arrow: return "<";
            case Mark::Circle: return "o";
        }
        return "?";
    };
    auto right = [](Mark m) {
        switch (m) {
            case Mark::Tail: return "-";
            case Mark::Arrow: return ">";
            case Mark::Circle: return "o";
        }
        return "?";
    };
    return g.name(a) + " " + left(g.mark_at(a, b)) + "-" + right(g.mark_at(b, a)) + " " + g.name(b);
}

std::string format_graph(const MixedGraph& g) {
    std::ostringstream out;
    for (NodeId v = 0; v < g.size(); ++v) out << "node " << g.name(v) << '\n';
    for (auto [a, b] : g.edges()) {
        if (g.is_directed(a, b))
            out << g.name(a) << " -> " << g.name(b) << '\n';
        else if (g.is_directed(b, a))
            out << g.name(b) << " -> " << g.name(a) << '\n';
        else if (g.is_bidirected(a, b))
            out << g.name(a) << " <-> " << g.name(b) << '\n';
        else
            throw GraphError("cannot write edge " + format_edge(g, a, b) + " in graph text format");
    }
    return out.str();
}

}  // namespace mmbl
