#pragma once

// Value types for undirected graphs, directed patterns, vertex partitions and
// partially oriented hosts. Vertex sets are single 64-bit words.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dorient {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Input violates a structural invariant (loop, duplicate, bad vertex).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds a documented size envelope.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed text input (descriptor or graph file).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

constexpr int popcount(VertexSet s) { return std::popcount(s); }

/// Calls f(v) for every vertex in s, in increasing order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f)
{
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

struct Edge {
    int u;
    int v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
    int from;
    int to;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline void check_order(int n)
{
    if (n < 1 || n > kMaxVertices) {
        throw CapacityError("vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
    }
}

class Graph {
public:
    Graph() : Graph(1) {}

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) { check_order(n); }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return popcount(neighbors(v)); }
    bool has_edge(int u, int v) const { return (neighbors(u) & bit(v)) != 0; }

    /// Index of edge {u,v} in the sorted edge list, or -1.
    int edge_index(int u, int v) const
    {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    VertexSet isolated_vertices() const
    {
        VertexSet s = 0;
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(v)] == 0) s |= bit(v);
        return s;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    friend Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs);

    int n_;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
};

/// Builds a normalized graph; pairs may come in either orientation.
inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs)
{
    Graph g(n);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                             ") has a vertex outside 0.." + std::to_string(n - 1));
        }
        if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (g.adj_[static_cast<std::size_t>(a)] & bit(b)) {
            throw GraphError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        g.adj_[static_cast<std::size_t>(a)] |= bit(b);
        g.adj_[static_cast<std::size_t>(b)] |= bit(a);
        g.edges_.push_back({a, b});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

inline std::vector<std::pair<int, int>> edge_pairs(const Graph& g)
{
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edges().size());
    for (auto e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

inline Graph without_edge(const Graph& g, int edge_idx)
{
    auto pairs = edge_pairs(g);
    pairs.erase(pairs.begin() + edge_idx);
    return make_graph(g.order(), pairs);
}

inline Graph with_edge(const Graph& g, int u, int v)
{
    auto pairs = edge_pairs(g);
    pairs.emplace_back(u, v);
    return make_graph(g.order(), pairs);
}

/// new label of vertex v is perm[v]
inline Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    std::vector<std::pair<int, int>> pairs;
    for (auto e : g.edges()) pairs.emplace_back(perm[static_cast<std::size_t>(e.u)],
                                                perm[static_cast<std::size_t>(e.v)]);
    return make_graph(g.order(), pairs);
}

/// Subgraph induced on `keep`, vertices renumbered in increasing order.
inline Graph induced(const Graph& g, VertexSet keep)
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    int k = 0;
    for_each_vertex(keep, [&](int v) { index[static_cast<std::size_t>(v)] = k++; });
    if (k == 0) throw GraphError("induced subgraph on an empty vertex set");
    std::vector<std::pair<int, int>> pairs;
    for (auto e : g.edges()) {
        int a = index[static_cast<std::size_t>(e.u)], b = index[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
    }
    return make_graph(k, pairs);
}

/// Drops isolated vertices. A graph with no edges collapses to a single vertex.
inline Graph strip_isolated(const Graph& g)
{
    VertexSet keep = all_vertices(g.order()) & ~g.isolated_vertices();
    if (keep == 0) return Graph(1);
    return induced(g, keep);
}

inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    if (a.order() + b.order() > kMaxVertices) throw CapacityError("disjoint union exceeds 64 vertices");
    auto pairs = edge_pairs(a);
    for (auto e : b.edges()) pairs.emplace_back(e.u + a.order(), e.v + a.order());
    return make_graph(a.order() + b.order(), pairs);
}

/// G with k isolated vertices appended.
inline Graph add_isolated(const Graph& g, int k)
{
    if (k == 0) return g;
    if (g.order() + k > kMaxVertices) throw CapacityError("adding isolated vertices exceeds 64 vertices");
    return make_graph(g.order() + k, edge_pairs(g));
}

class Digraph {
public:
    Digraph() : Digraph(1) {}

    explicit Digraph(int n)
        : n_(n), out_(static_cast<std::size_t>(n), 0), in_(static_cast<std::size_t>(n), 0)
    {
        check_order(n);
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    VertexSet out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
    VertexSet in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }
    bool has_arc(int u, int v) const { return (out_neighbors(u) & bit(v)) != 0; }
    int out_degree(int v) const { return popcount(out_neighbors(v)); }
    int in_degree(int v) const { return popcount(in_neighbors(v)); }

    friend bool operator==(const Digraph& a, const Digraph& b)
    {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    friend Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs);

    int n_;
    std::vector<Arc> arcs_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

inline Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs)
{
    Digraph d(n);
    for (auto [a, b] : arcs) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw GraphError("arc (" + std::to_string(a) + "," + std::to_string(b) +
                             ") has a vertex outside 0.." + std::to_string(n - 1));
        }
        if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
        if (d.out_[static_cast<std::size_t>(a)] & bit(b)) {
            throw GraphError("duplicate arc (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        if (d.out_[static_cast<std::size_t>(b)] & bit(a)) {
            throw GraphError("bidirected pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        d.out_[static_cast<std::size_t>(a)] |= bit(b);
        d.in_[static_cast<std::size_t>(b)] |= bit(a);
        d.arcs_.push_back({a, b});
    }
    std::sort(d.arcs_.begin(), d.arcs_.end());
    return d;
}

inline std::vector<std::pair<int, int>> arc_pairs(const Digraph& d)
{
    std::vector<std::pair<int, int>> out;
    out.reserve(d.arcs().size());
    for (auto a : d.arcs()) out.emplace_back(a.from, a.to);
    return out;
}

inline Graph underlying(const Digraph& d) { return make_graph(d.order(), arc_pairs(d)); }

inline Digraph reversed(const Digraph& d)
{
    std::vector<std::pair<int, int>> arcs;
    for (auto a : d.arcs()) arcs.emplace_back(a.to, a.from);
    return make_digraph(d.order(), arcs);
}

inline Digraph relabel(const Digraph& d, const std::vector<int>& perm)
{
    std::vector<std::pair<int, int>> arcs;
    for (auto a : d.arcs()) arcs.emplace_back(perm[static_cast<std::size_t>(a.from)],
                                              perm[static_cast<std::size_t>(a.to)]);
    return make_digraph(d.order(), arcs);
}

/// Orientation of g given by one bit per edge: 0 sends (u,v), u<v, to u->v.
template <typename Bits>
Digraph orient(const Graph& g, const Bits& bits)
{
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto e = g.edges()[i];
        if (bits[i]) arcs.emplace_back(e.v, e.u);
        else arcs.emplace_back(e.u, e.v);
    }
    return make_digraph(g.order(), arcs);
}

inline Digraph orient_mask(const Graph& g, std::uint64_t mask)
{
    std::vector<bool> bits(g.edges().size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (mask >> i) & 1U;
    return orient(g, bits);
}

class Partition {
public:
    Partition(int n, std::vector<VertexSet> parts, bool allow_empty = false)
        : n_(n), parts_(std::move(parts))
    {
        check_order(n);
        VertexSet seen = 0;
        for (auto p : parts_) {
            if (p == 0 && !allow_empty) throw GraphError("partition has an empty part");
            if (p & seen) throw GraphError("partition parts overlap");
            if (p & ~all_vertices(n)) throw GraphError("partition part has a vertex out of range");
            seen |= p;
        }
        if (seen != all_vertices(n)) throw GraphError("partition does not cover every vertex");
    }

    int order() const { return n_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<VertexSet>& parts() const { return parts_; }

    int part_of(int v) const
    {
        for (std::size_t i = 0; i < parts_.size(); ++i)
            if (parts_[i] & bit(v)) return static_cast<int>(i);
        return -1;
    }

    /// Number of edges of g with both ends in the same part.
    int internal_edges(const Graph& g) const
    {
        int count = 0;
        for (auto e : g.edges())
            if (part_of(e.u) == part_of(e.v)) ++count;
        return count;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int n_;
    std::vector<VertexSet> parts_;
};

enum class EdgeState : std::int8_t { Free = -1, Forward = 0, Backward = 1 };

/// A graph in which some edges carry a fixed direction and the rest are free.
class PartialOrientation {
public:
    explicit PartialOrientation(Graph base)
        : base_(std::move(base)), state_(static_cast<std::size_t>(base_.size()), EdgeState::Free)
    {
    }

    const Graph& base() const { return base_; }
    EdgeState state(int edge_idx) const { return state_[static_cast<std::size_t>(edge_idx)]; }
    const std::vector<EdgeState>& states() const { return state_; }

    /// Fixes edge {from,to} as the arc from->to.
    void fix_arc(int from, int to)
    {
        int idx = base_.edge_index(from, to);
        if (idx < 0) {
            throw GraphError("arc (" + std::to_string(from) + "," + std::to_string(to) +
                             ") is not an edge of the base graph");
        }
        auto want = from < to ? EdgeState::Forward : EdgeState::Backward;
        auto& s = state_[static_cast<std::size_t>(idx)];
        if (s != EdgeState::Free && s != want) {
            throw GraphError("edge (" + std::to_string(from) + "," + std::to_string(to) +
                             ") already fixed in the opposite direction");
        }
        s = want;
    }

    void set_state(int edge_idx, EdgeState s) { state_.at(static_cast<std::size_t>(edge_idx)) = s; }

    std::vector<int> fixed_indices() const { return indices(false); }
    std::vector<int> free_indices() const { return indices(true); }

    /// Fixed arcs as a digraph on the base vertex set.
    Digraph fixed_digraph() const
    {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < base_.size(); ++i) {
            auto e = base_.edges()[static_cast<std::size_t>(i)];
            if (state(i) == EdgeState::Forward) arcs.emplace_back(e.u, e.v);
            else if (state(i) == EdgeState::Backward) arcs.emplace_back(e.v, e.u);
        }
        return make_digraph(base_.order(), arcs);
    }

private:
    std::vector<int> indices(bool free) const
    {
        std::vector<int> out;
        for (int i = 0; i < base_.size(); ++i)
            if ((state(i) == EdgeState::Free) == free) out.push_back(i);
        return out;
    }

    Graph base_;
    std::vector<EdgeState> state_;
};

/// Host whose free edges are `free_edges` and whose fixed arcs are `fixed`.
inline PartialOrientation make_partial(int n, const std::vector<std::pair<int, int>>& free_edges,
                                       const std::vector<std::pair<int, int>>& fixed)
{
    auto all = free_edges;
    all.insert(all.end(), fixed.begin(), fixed.end());
    PartialOrientation p(make_graph(n, all));
    for (auto [a, b] : fixed) p.fix_arc(a, b);
    return p;
}

inline std::string to_string(const Graph& g)
{
    std::ostringstream os;
    os << "n=" << g.order() << " [";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (i) os << ' ';
        os << g.edges()[i].u << '-' << g.edges()[i].v;
    }
    os << ']';
    return os.str();
}

inline std::string to_string(const Digraph& d)
{
    std::ostringstream os;
    os << "n=" << d.order() << " [";
    for (std::size_t i = 0; i < d.arcs().size(); ++i) {
        if (i) os << ' ';
        os << d.arcs()[i].from << '>' << d.arcs()[i].to;
    }
    os << ']';
    return os.str();
}

}  // namespace dorient
