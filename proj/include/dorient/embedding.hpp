#pragma once

// Subgraph embeddings (injective, not induced) for undirected, directed and
// partially oriented hosts, by bitset backtracking.

#include "dorient/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace dorient {

struct Embedding {
    /// map[x] = host vertex receiving pattern vertex x
    std::vector<int> map;
    friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

namespace detail {

// For every host vertex v: succ[v] holds the w such that a pattern arc
// mapped to (v,w) is allowed, pred[v] the w such that (w,v) is allowed.
struct HostView {
    int n = 0;
    std::vector<VertexSet> succ;
    std::vector<VertexSet> pred;
};

// Pattern arcs as out/in neighbour sets. An undirected pattern edge is stored
// in both directions, which asks the host for both succ and pred.
struct PatternView {
    int n = 0;
    std::vector<VertexSet> out;
    std::vector<VertexSet> in;
};

inline HostView view_of(const Graph& g)
{
    HostView h{g.order(), {}, {}};
    for (int v = 0; v < g.order(); ++v) {
        h.succ.push_back(g.neighbors(v));
        h.pred.push_back(g.neighbors(v));
    }
    return h;
}

inline HostView view_of(const Digraph& d)
{
    HostView h{d.order(), {}, {}};
    for (int v = 0; v < d.order(); ++v) {
        h.succ.push_back(d.out_neighbors(v));
        h.pred.push_back(d.in_neighbors(v));
    }
    return h;
}

inline HostView view_of(const PartialOrientation& p)
{
    const Graph& g = p.base();
    HostView h{g.order(), std::vector<VertexSet>(static_cast<std::size_t>(g.order()), 0),
               std::vector<VertexSet>(static_cast<std::size_t>(g.order()), 0)};
    for (int i = 0; i < g.size(); ++i) {
        auto e = g.edges()[static_cast<std::size_t>(i)];
        auto s = p.state(i);
        auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        if (s != EdgeState::Backward) {  // u->v possible
            h.succ[u] |= bit(e.v);
            h.pred[v] |= bit(e.u);
        }
        if (s != EdgeState::Forward) {  // v->u possible
            h.succ[v] |= bit(e.u);
            h.pred[u] |= bit(e.v);
        }
    }
    return h;
}

inline PatternView pattern_of(const Graph& g)
{
    PatternView p{g.order(), {}, {}};
    for (int v = 0; v < g.order(); ++v) {
        p.out.push_back(g.neighbors(v));
        p.in.push_back(g.neighbors(v));
    }
    return p;
}

inline PatternView pattern_of(const Digraph& d)
{
    PatternView p{d.order(), {}, {}};
    for (int v = 0; v < d.order(); ++v) {
        p.out.push_back(d.out_neighbors(v));
        p.in.push_back(d.in_neighbors(v));
    }
    return p;
}

// Visit order: highest degree first, then the vertex with the most already
// ordered neighbours (ties: higher degree, lower index).
inline std::vector<int> search_order(const PatternView& p)
{
    std::vector<int> order;
    VertexSet done = 0;
    auto degree = [&](int v) {
        return popcount(p.out[static_cast<std::size_t>(v)] | p.in[static_cast<std::size_t>(v)]);
    };
    for (int step = 0; step < p.n; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < p.n; ++v) {
            if (done & bit(v)) continue;
            int conn = popcount((p.out[static_cast<std::size_t>(v)] | p.in[static_cast<std::size_t>(v)]) & done);
            int deg = degree(v);
            if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        order.push_back(best);
        done |= bit(best);
    }
    return order;
}

// Calls visit(map) for every embedding; stops early when visit returns false.
// Returns false iff stopped early.
template <typename Visit>
bool search_embeddings(const PatternView& p, const HostView& h, Visit&& visit)
{
    if (p.n > h.n) return true;
    auto order = search_order(p);
    std::vector<int> map(static_cast<std::size_t>(p.n), -1);

    std::vector<int> host_out(static_cast<std::size_t>(h.n)), host_in(static_cast<std::size_t>(h.n));
    for (int v = 0; v < h.n; ++v) {
        host_out[static_cast<std::size_t>(v)] = popcount(h.succ[static_cast<std::size_t>(v)]);
        host_in[static_cast<std::size_t>(v)] = popcount(h.pred[static_cast<std::size_t>(v)]);
    }
    // vertices able to host each pattern vertex by degree alone
    std::vector<VertexSet> fits(static_cast<std::size_t>(p.n), 0);
    for (int x = 0; x < p.n; ++x) {
        int need_out = popcount(p.out[static_cast<std::size_t>(x)]);
        int need_in = popcount(p.in[static_cast<std::size_t>(x)]);
        for (int v = 0; v < h.n; ++v)
            if (host_out[static_cast<std::size_t>(v)] >= need_out && host_in[static_cast<std::size_t>(v)] >= need_in)
                fits[static_cast<std::size_t>(x)] |= bit(v);
    }

    auto recurse = [&](auto&& self, int depth, VertexSet used) -> bool {
        if (depth == p.n) return visit(static_cast<const std::vector<int>&>(map));
        int x = order[static_cast<std::size_t>(depth)];
        VertexSet cand = fits[static_cast<std::size_t>(x)] & ~used;
        for (int d = 0; d < depth && cand; ++d) {
            int y = order[static_cast<std::size_t>(d)];
            int hy = map[static_cast<std::size_t>(y)];
            if (p.out[static_cast<std::size_t>(y)] & bit(x)) cand &= h.succ[static_cast<std::size_t>(hy)];
            if (p.in[static_cast<std::size_t>(y)] & bit(x)) cand &= h.pred[static_cast<std::size_t>(hy)];
        }
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            map[static_cast<std::size_t>(x)] = c;
            if (!self(self, depth + 1, used | bit(c))) return false;
        }
        map[static_cast<std::size_t>(x)] = -1;
        return true;
    };
    return recurse(recurse, 0, 0);
}

}  // namespace detail

/// Calls visit(const std::vector<int>& map) for each embedding of pattern into
/// host; visit returns false to stop.
template <typename Visit>
void for_each_embedding(const Graph& pattern, const Graph& host, Visit&& visit)
{
    detail::search_embeddings(detail::pattern_of(pattern), detail::view_of(host), visit);
}

template <typename Visit>
void for_each_embedding(const Digraph& pattern, const Digraph& host, Visit&& visit)
{
    detail::search_embeddings(detail::pattern_of(pattern), detail::view_of(host), visit);
}

template <typename Visit>
void for_each_embedding(const Digraph& pattern, const PartialOrientation& host, Visit&& visit)
{
    detail::search_embeddings(detail::pattern_of(pattern), detail::view_of(host), visit);
}

/// All injective maps sending pattern edges onto host edges, sorted
/// lexicographically by the map. With a limit, the first `limit` maps found
/// in search order are returned (then sorted).
inline std::vector<Embedding> embeddings_undirected(const Graph& pattern, const Graph& host,
                                                    std::optional<std::size_t> limit = std::nullopt)
{
    std::vector<Embedding> out;
    if (limit && *limit == 0) return out;
    for_each_embedding(pattern, host, [&](const std::vector<int>& map) {
        out.push_back({map});
        return !(limit && out.size() >= *limit);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host)
{
    std::optional<Embedding> found;
    for_each_embedding(pattern, host, [&](const std::vector<int>& map) {
        found = Embedding{map};
        return false;
    });
    return found;
}

inline bool contains_undirected(const Graph& host, const Graph& pattern)
{
    return find_embedding(pattern, host).has_value();
}

inline bool contains_directed(const Digraph& host, const Digraph& pattern)
{
    bool found = false;
    for_each_embedding(pattern, host, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

/// Fixed host edges must carry the pattern arc's direction; free host edges
/// accept either.
inline bool contains_directed_flexible(const PartialOrientation& host, const Digraph& pattern)
{
    bool found = false;
    for_each_embedding(pattern, host, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

inline std::optional<Embedding> find_embedding_flexible(const PartialOrientation& host, const Digraph& pattern)
{
    std::optional<Embedding> found;
    for_each_embedding(pattern, host, [&](const std::vector<int>& map) {
        found = Embedding{map};
        return false;
    });
    return found;
}

/// True iff every pattern edge lands on a host edge and the map is injective.
inline bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& e)
{
    if (static_cast<int>(e.map.size()) != pattern.order()) return false;
    VertexSet used = 0;
    for (int v : e.map) {
        if (v < 0 || v >= host.order() || (used & bit(v))) return false;
        used |= bit(v);
    }
    for (auto edge : pattern.edges())
        if (!host.has_edge(e.map[static_cast<std::size_t>(edge.u)], e.map[static_cast<std::size_t>(edge.v)]))
            return false;
    return true;
}

}  // namespace dorient
