#pragma once

// Line-oriented graph files:
//   n <count>        vertex count, must come first
//   e <u> <v>        undirected (free) edge
//   a <u> <v>        arc u -> v
// '#' starts a comment. Only e lines give a Graph, only a lines a Digraph,
// both a PartialOrientation whose a lines are the fixed edges.

#include "dorient/graph.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dorient {

using GraphFile = std::variant<Graph, Digraph, PartialOrientation>;

inline GraphFile parse_graph_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0, n = -1;
    std::vector<std::pair<int, int>> edges, arcs;
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "n") {
            if (n >= 0) fail("duplicate n line");
            if (!(ls >> n) || n < 1) fail("n needs a positive vertex count");
            if (n > kMaxVertices) throw CapacityError("graph has " + std::to_string(n) + " vertices (limit 64)");
        } else if (tag == "e" || tag == "a") {
            if (n < 0) fail("edge before the n line");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) fail("expected two vertex numbers");
            if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
            (tag == "e" ? edges : arcs).emplace_back(u, v);
        } else {
            fail("unknown line type '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing text '" + extra + "'");
    }
    if (n < 0) throw ParseError("missing n line");
    try {
        if (arcs.empty()) return make_graph(n, edges);
        if (edges.empty()) return make_digraph(n, arcs);
        return make_partial(n, edges, arcs);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

inline GraphFile read_graph_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open graph file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return parse_graph_text(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline std::string write_graph_text(const Graph& g)
{
    std::ostringstream os;
    os << "n " << g.order() << "\n";
    for (auto e : g.edges()) os << "e " << e.u << " " << e.v << "\n";
    return os.str();
}

inline std::string write_graph_text(const Digraph& d)
{
    std::ostringstream os;
    os << "n " << d.order() << "\n";
    for (auto a : d.arcs()) os << "a " << a.from << " " << a.to << "\n";
    return os.str();
}

inline std::string write_graph_text(const PartialOrientation& p)
{
    std::ostringstream os;
    os << "n " << p.base().order() << "\n";
    for (int i = 0; i < p.base().size(); ++i) {
        auto e = p.base().edges()[static_cast<std::size_t>(i)];
        switch (p.state(i)) {
        case EdgeState::Free: os << "e " << e.u << " " << e.v << "\n"; break;
        case EdgeState::Forward: os << "a " << e.u << " " << e.v << "\n"; break;
        case EdgeState::Backward: os << "a " << e.v << " " << e.u << "\n"; break;
        }
    }
    return os.str();
}

}  // namespace dorient
