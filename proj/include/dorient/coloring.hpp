#pragma once

#include "dorient/graph.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace dorient {

inline constexpr int kChromaticMaxVertices = 20;
inline constexpr int kPartitionMaxVertices = 14;

namespace detail {

inline bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, int k,
                      std::size_t idx)
{
    if (idx == order.size()) return true;
    int v = order[idx];
    // symmetry: never open more than one new colour at a time
    int max_used = -1;
    for (std::size_t i = 0; i < idx; ++i) max_used = std::max(max_used, color[static_cast<std::size_t>(order[i])]);
    for (int c = 0; c <= std::min(k - 1, max_used + 1); ++c) {
        bool ok = true;
        for_each_vertex(g.neighbors(v), [&](int w) {
            if (color[static_cast<std::size_t>(w)] == c) ok = false;
        });
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (colorable(g, order, color, k, idx + 1)) return true;
        color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

}  // namespace detail

/// Colouring with k colours, if one exists (colour per vertex).
inline std::optional<std::vector<int>> find_coloring(const Graph& g, int k)
{
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    if (detail::colorable(g, order, color, k, 0)) return color;
    return std::nullopt;
}

inline int chromatic_number(const Graph& g)
{
    if (g.order() > kChromaticMaxVertices) {
        throw CapacityError("chromatic number supports at most " + std::to_string(kChromaticMaxVertices) +
                            " vertices");
    }
    for (int k = 1;; ++k)
        if (find_coloring(g, k)) return k;
}

struct PartitionResult {
    Partition partition;
    int internal_edges;
};

/// A p-partition minimizing edges inside parts. Among minimizers the
/// lexicographically smallest assignment vector (vertex 0 first) wins.
/// Parts may be empty.
inline PartitionResult optimal_partition(const Graph& g, int p)
{
    if (p < 1) throw GraphError("optimal_partition needs p >= 1");
    if (g.order() > kPartitionMaxVertices) {
        throw CapacityError("optimal partition supports at most " + std::to_string(kPartitionMaxVertices) +
                            " vertices");
    }
    const int n = g.order();
    std::vector<int> assign(static_cast<std::size_t>(n), 0), best_assign;
    std::vector<VertexSet> part(static_cast<std::size_t>(p), 0);
    int best = g.size() + 1;

    // Assignments are visited in lexicographic order, so only strict
    // improvements replace the incumbent.
    auto recurse = [&](auto&& self, int v, int cost) -> void {
        if (cost >= best) return;
        if (v == n) {
            best = cost;
            best_assign = assign;
            return;
        }
        for (int c = 0; c < p; ++c) {
            int add = popcount(g.neighbors(v) & part[static_cast<std::size_t>(c)]);
            assign[static_cast<std::size_t>(v)] = c;
            part[static_cast<std::size_t>(c)] |= bit(v);
            self(self, v + 1, cost + add);
            part[static_cast<std::size_t>(c)] &= ~bit(v);
        }
    };
    recurse(recurse, 0, 0);

    std::vector<VertexSet> parts(static_cast<std::size_t>(p), 0);
    for (int v = 0; v < n; ++v) parts[static_cast<std::size_t>(best_assign[static_cast<std::size_t>(v)])] |= bit(v);
    return {Partition(n, parts, true), best};
}

}  // namespace dorient
