#pragma once

// Exhaustive extremal search over isomorphism classes.
//
// Classes are generated level by level: every class with m+1 edges is some
// class with m edges plus one edge, so extending each stored class by each
// missing edge and deduplicating by canonical code reaches all of them. For
// F-free searches only F-free graphs are kept, which is enough because
// deleting an edge preserves F-freeness.

#include "dorient/canonical.hpp"
#include "dorient/count.hpp"
#include "dorient/embedding.hpp"
#include "dorient/exact.hpp"
#include "dorient/graph.hpp"
#include "dorient/parallel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <vector>

namespace dorient {

inline constexpr int kExtremalMaxVertices = 7;
inline constexpr int kMaxDMaxVertices = 6;

struct ExtremalResult {
    int n = 0;
    int max_edges = 0;
    /// canonical F-free graphs with max_edges edges, in canonical-code order
    std::vector<Graph> witnesses;
    std::vector<Graph> family;
};

struct MaxDResult {
    int n = 0;
    BigInt max_count;
    std::vector<Graph> witnesses;
    /// classes actually counted (the rest were cut by the 2^m bound)
    std::size_t counted = 0;
    std::size_t classes = 0;
};

struct SearchOptions {
    unsigned threads = 1;
    bool force = false;
    /// per-level status lines go here when set
    std::ostream* progress = nullptr;
    /// max_d: skip classes whose 2^m is below the running maximum
    bool prune = true;
};

inline bool is_free_of(const Graph& g, const std::vector<Graph>& forbidden)
{
    for (const auto& f : forbidden)
        if (f.order() <= g.order() && contains_undirected(g, f)) return false;
    return true;
}

/// levels[m] = canonical classes with m edges accepted by keep, in code order.
template <typename Keep>
std::vector<std::vector<Graph>> graph_classes(int n, Keep&& keep, const SearchOptions& opt = {})
{
    check_order(n);
    if (n > kCanonicalMaxVertices) throw CapacityError("class generation supports at most 10 vertices");
    std::vector<std::vector<Graph>> levels;
    Graph empty(n);
    if (!keep(empty)) return levels;
    levels.push_back({empty});
    if (opt.progress) *opt.progress << "level 0: 1 class\n";
    while (true) {
        const auto& prev = levels.back();
        std::vector<std::vector<std::pair<CanonicalCode, Graph>>> found(prev.size());
        parallel_for(prev.size(), opt.threads, [&](std::size_t i) {
            const Graph& g = prev[i];
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    Graph next = with_edge(g, u, v);
                    if (!keep(next)) continue;
                    auto c = canonical_labeling(next);
                    found[i].emplace_back(c.code, relabel(next, c.perm));
                }
        });
        std::map<CanonicalCode, Graph> merged;
        for (auto& f : found)
            for (auto& [code, g] : f) merged.emplace(code, std::move(g));
        if (merged.empty()) break;
        std::vector<Graph> level;
        for (auto& [code, g] : merged) level.push_back(std::move(g));
        if (opt.progress) {
            *opt.progress << "level " << levels.size() << ": " << level.size() << " class"
                          << (level.size() == 1 ? "" : "es") << "\n";
        }
        levels.push_back(std::move(level));
    }
    return levels;
}

/// ex(n, forbidden) with every extremal graph up to isomorphism.
inline ExtremalResult extremal_number(int n, const std::vector<Graph>& forbidden, const SearchOptions& opt = {})
{
    if (n < 1) throw GraphError("extremal search needs n >= 1");
    if (n > kExtremalMaxVertices && !opt.force) {
        throw CapacityError("extremal search supports n <= " + std::to_string(kExtremalMaxVertices) +
                            " (use --force to go further)");
    }
    if (forbidden.empty()) throw GraphError("extremal search needs at least one forbidden graph");
    for (const auto& f : forbidden)
        if (f.size() == 0) throw GraphError("forbidden graphs must have at least one edge");
    auto levels = graph_classes(n, [&](const Graph& g) { return is_free_of(g, forbidden); }, opt);
    ExtremalResult r;
    r.n = n;
    r.max_edges = static_cast<int>(levels.size()) - 1;
    r.witnesses = levels.back();
    r.family = forbidden;
    return r;
}

/// Maximum of D(G, H) over all graphs G on n vertices.
inline MaxDResult max_d(int n, const Digraph& h, const SearchOptions& opt = {})
{
    if (n < 1) throw GraphError("max_d needs n >= 1");
    if (n > kMaxDMaxVertices && !opt.force) {
        throw CapacityError("max_d supports n <= " + std::to_string(kMaxDMaxVertices) +
                            " (use --force to go further)");
    }
    SearchOptions quiet = opt;
    quiet.progress = nullptr;
    auto levels = graph_classes(n, [](const Graph&) { return true; }, quiet);

    // Densest classes first so the bound bites early.
    std::vector<const Graph*> order;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
        for (const auto& g : *it) order.push_back(&g);

    std::vector<std::optional<BigInt>> value(order.size());
    BigInt best = 0;
    std::mutex best_mutex;
    CountOptions copt;
    copt.force = opt.force;
    std::size_t level_start = 0;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        const std::size_t count = it->size();
        const int m = (*it)[0].size();
        BigInt cap = pow2(static_cast<unsigned>(m));
        parallel_for(count, opt.threads, [&](std::size_t j) {
            const std::size_t i = level_start + j;
            if (opt.prune) {
                std::lock_guard lock(best_mutex);
                if (cap < best) return;
            }
            BigInt d = count_avoiding(order[i]->size(), forbidden_patterns(*order[i], h), {}, copt);
            std::lock_guard lock(best_mutex);
            if (d > best) best = d;
            value[i] = std::move(d);
        });
        if (opt.progress) *opt.progress << "edges " << m << ": " << count << " classes, best so far " << best << "\n";
        level_start += count;
    }

    MaxDResult r;
    r.n = n;
    r.max_count = best;
    r.classes = order.size();
    std::vector<std::pair<CanonicalCode, Graph>> wit;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!value[i]) continue;
        ++r.counted;
        if (*value[i] == best) wit.emplace_back(canonical_code(*order[i]), *order[i]);
    }
    std::sort(wit.begin(), wit.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& w : wit) r.witnesses.push_back(std::move(w.second));
    return r;
}

struct LowerBoundResult {
    /// ex(n, underlying(H))
    int exponent = 0;
    Graph witness;
    BigInt witness_count;
    /// witness_count == 2^exponent
    bool holds = false;
};

/// D(n, H) >= 2^ex(n, H), certified by an extremal witness.
inline LowerBoundResult lower_bound_check(int n, const Digraph& h, const SearchOptions& opt = {})
{
    auto ex = extremal_number(n, {underlying(h)}, opt);
    LowerBoundResult r;
    r.exponent = ex.max_edges;
    r.witness = ex.witnesses.front();
    CountOptions copt;
    copt.threads = opt.threads;
    copt.force = opt.force;
    r.witness_count = count_hfree(r.witness, h, copt).hfree;
    r.holds = r.witness_count == pow2(static_cast<unsigned>(r.exponent));
    return r;
}

}  // namespace dorient
