#pragma once

// Decomposition families.
//
// With p = chi(H) - 1, the host for a candidate M is
//     (M + t isolated vertices) joined with K_{p-1}(t)
// laid out as: M's vertices first, then the t isolated vertices (together
// "part 0"), then p-1 independent parts of t vertices each, every pair of
// distinct parts completely joined.
//
// If H embeds in the host of some M, the vertices of H landing in part 0
// induce a subgraph H[S] whose edges all lie in M, and H also embeds in the
// host of H[S] itself. So every minimal member is (isomorphic to) some H[S]
// with its isolated vertices dropped, and those are the only candidates tried.
// t = |V(H)| loses nothing: an embedding uses at most |V(H)| vertices of any
// part, so a larger t never admits a new member.

#include "dorient/canonical.hpp"
#include "dorient/coloring.hpp"
#include "dorient/embedding.hpp"
#include "dorient/families.hpp"
#include "dorient/graph.hpp"
#include "dorient/parallel.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace dorient {

struct FamilyResult {
    /// canonical representatives in canonical-code order, no isolated vertices
    std::vector<Graph> members;
    int p = 0;
    int t_used = 0;
    /// witnesses[i] embeds H into host_graph(members[i], p, t_used)
    std::vector<Embedding> witnesses;
};

struct DirectedFamilyResult {
    Graph base;
    /// orientation classes of base that belong to the directed family
    std::vector<Digraph> member_orientations;
    /// every orientation class of base belongs (base is in M')
    bool all_orientations_in = false;
    int orientation_classes = 0;
};

/// Vertex count of host_graph(m, p, t).
inline int host_order(int m_order, int p, int t) { return m_order + t + (p - 1) * t; }

inline Graph host_graph(const Graph& m, int p, int t)
{
    if (p < 2) throw GraphError("host needs p >= 2");
    if (t < 0) throw GraphError("host part size must be non-negative");
    const int n = host_order(m.order(), p, t);
    if (n > kMaxVertices) {
        throw CapacityError("decomposition host would need " + std::to_string(n) + " vertices (limit 64)");
    }
    const int part0 = m.order() + t;
    auto part_of = [&](int v) { return v < part0 ? 0 : 1 + (v - part0) / t; };
    auto pairs = edge_pairs(m);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of(u) != part_of(v)) pairs.emplace_back(u, v);
    return make_graph(n, pairs);
}

/// True iff H embeds in the host built from M.
inline bool host_contains(const Graph& m, const Graph& h, int p, int t)
{
    if (m.size() == 0) return false;
    return contains_undirected(host_graph(m, p, t), h);
}

namespace detail {

inline std::string exact_key(const Graph& g) { return to_string(g); }

class FamilyCache {
public:
    std::optional<FamilyResult> find(const std::string& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const std::string& key, const FamilyResult& r)
    {
        std::unique_lock lock(mutex_);
        entries_.emplace(key, r);
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        entries_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, FamilyResult> entries_;
};

inline FamilyCache& family_cache()
{
    static FamilyCache cache;
    return cache;
}

// Members for a graph already in canonical labeling.
inline FamilyResult compute_family(const Graph& h, int p, int t, unsigned threads)
{
    const int n = h.order();
    std::vector<std::pair<CanonicalCode, Graph>> candidates;
    for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
        Graph sub = strip_isolated(induced(h, s));
        if (sub.size() == 0) continue;
        auto c = canonical_labeling(sub);
        candidates.emplace_back(c.code, relabel(sub, c.perm));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const auto& a, const auto& b) { return a.first == b.first; }),
                     candidates.end());

    std::vector<char> member(candidates.size(), 0);
    std::vector<Embedding> witness(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        const Graph& m = candidates[i].second;
        auto found = find_embedding(h, host_graph(m, p, t));
        if (!found) return;
        for (int e = 0; e < m.size(); ++e)
            if (host_contains(strip_isolated(without_edge(m, e)), h, p, t)) return;
        member[i] = 1;
        witness[i] = *found;
    });

    FamilyResult r;
    r.p = p;
    r.t_used = t;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!member[i]) continue;
        r.members.push_back(candidates[i].second);
        r.witnesses.push_back(witness[i]);
    }
    return r;
}

}  // namespace detail

inline void clear_family_cache() { detail::family_cache().clear(); }

/// M(H) at part size t (default |V(H)|).
inline FamilyResult decomposition_family(const Graph& h, std::optional<int> t = std::nullopt, unsigned threads = 1)
{
    if (h.order() > kCanonicalMaxVertices) {
        throw CapacityError("decomposition family supports at most " + std::to_string(kCanonicalMaxVertices) +
                            " vertices in H");
    }
    int chi = chromatic_number(h);
    if (chi < 3) throw GraphError("decomposition family needs chromatic number >= 3 (got " + std::to_string(chi) + ")");
    const int p = chi - 1;
    const int t_used = t.value_or(h.order());
    if (t_used < 1) throw GraphError("part size t must be positive");

    // Work on the canonical copy of H so the cache can be shared between
    // isomorphic inputs; witnesses are translated back afterwards.
    auto lab = canonical_labeling(h);
    Graph hc = relabel(h, lab.perm);
    std::string key = canonical_form(h) + "|" + std::to_string(t_used);
    auto cached = detail::family_cache().find(key);
    FamilyResult r = cached ? *cached : detail::compute_family(hc, p, t_used, threads);
    if (!cached) detail::family_cache().insert(key, r);

    for (auto& w : r.witnesses) {
        std::vector<int> map(static_cast<std::size_t>(h.order()));
        for (int x = 0; x < h.order(); ++x)
            map[static_cast<std::size_t>(x)] = w.map[static_cast<std::size_t>(lab.perm[static_cast<std::size_t>(x)])];
        w.map = std::move(map);
    }
    return r;
}

/// Index of m's class in the family, or -1.
inline int family_index(const FamilyResult& family, const Graph& m)
{
    Graph stripped = strip_isolated(m);
    for (std::size_t i = 0; i < family.members.size(); ++i)
        if (isomorphic(family.members[i], stripped)) return static_cast<int>(i);
    return -1;
}

/// Host of M with M's edges fixed as in m_oriented and every other edge free.
inline PartialOrientation directed_host(const Digraph& m_oriented, int p, int t)
{
    PartialOrientation host(host_graph(underlying(m_oriented), p, t));
    for (auto a : m_oriented.arcs()) host.fix_arc(a.from, a.to);
    return host;
}

/// Whether the orientation m_oriented of a member of M(underlying H) lies in
/// the directed family of h_oriented.
inline bool directed_membership(const Digraph& m_oriented, const Digraph& h_oriented,
                                std::optional<int> t = std::nullopt)
{
    Graph h = underlying(h_oriented);
    auto family = decomposition_family(h, t);
    if (family_index(family, underlying(m_oriented)) < 0) {
        throw GraphError("underlying graph of the oriented member is not in the decomposition family");
    }
    return contains_directed_flexible(directed_host(m_oriented, family.p, family.t_used), h_oriented);
}

/// Directed membership of every orientation class of every family member.
inline std::vector<DirectedFamilyResult> directed_family(const Digraph& h_oriented, std::optional<int> t = std::nullopt)
{
    auto family = decomposition_family(underlying(h_oriented), t);
    std::vector<DirectedFamilyResult> out;
    for (const auto& m : family.members) {
        DirectedFamilyResult r;
        r.base = m;
        auto classes = orientation_classes(m);
        r.orientation_classes = static_cast<int>(classes.size());
        for (const auto& o : classes)
            if (contains_directed_flexible(directed_host(o, family.p, family.t_used), h_oriented))
                r.member_orientations.push_back(o);
        r.all_orientations_in = r.member_orientations.size() == classes.size();
        out.push_back(std::move(r));
    }
    return out;
}

/// M'(H): members all of whose orientations are in the directed family.
inline std::vector<Graph> m_prime(const Digraph& h_oriented, std::optional<int> t = std::nullopt)
{
    std::vector<Graph> out;
    for (const auto& r : directed_family(h_oriented, t))
        if (r.all_orientations_in) out.push_back(r.base);
    return out;
}

/// Every blade of the (k,r)-fan has an arc into and an arc out of vertex 0.
inline bool is_anti_directed_fan(const Digraph& f, int k, int r)
{
    if (!(underlying(f) == fan_graph(k, r))) throw GraphError("digraph is not an orientation of fan:" +
                                                             std::to_string(k) + "," + std::to_string(r));
    for (int b = 0; b < k; ++b) {
        bool in = false, out = false;
        for (int x : fan_blade(b, r)) {
            in = in || f.has_arc(x, 0);
            out = out || f.has_arc(0, x);
        }
        if (!in || !out) return false;
    }
    return true;
}

/// Short name for graphs of the named families, otherwise the edge list.
inline std::string describe(const Graph& g)
{
    Graph s = strip_isolated(g);
    const int n = s.order(), m = s.size();
    auto same = [&](const Graph& other) { return other.order() == n && other.size() == m && isomorphic(s, other); };
    if (n > kCanonicalMaxVertices) return to_string(g);
    if (m == n * (n - 1) / 2) return "complete:" + std::to_string(n);
    if (m == n - 1 && same(star_graph(n - 1))) return "star:" + std::to_string(n - 1);
    if (2 * m == n && same(matching_graph(m))) return "matching:" + std::to_string(m);
    if (m == n && n >= 3 && same(cycle_graph(n))) return "cycle:" + std::to_string(n);
    if (m == n - 1 && same(path_graph(n))) return "path:" + std::to_string(n);
    return to_string(s);
}

}  // namespace dorient
