#pragma once

// Canonical labels by permutation minimization.
//
// Vertices are first grouped by an isomorphism-invariant key (degree, or
// out/in-degree for digraphs); only orderings that list the groups in key
// order are tried. Among those, the label is the lexicographically smallest
// adjacency string read column by column: (0,1), (0,2), (1,2), (0,3), ...
// Reading by columns lets a partial ordering fix a prefix of the string, so
// branches whose prefix already exceeds the best are cut.

#include "dorient/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dorient {

inline constexpr int kCanonicalMaxVertices = 10;
inline constexpr int kDirectedCanonicalMaxVertices = 8;

struct CanonicalCode {
    int n = 0;
    std::uint64_t bits = 0;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalResult {
    CanonicalCode code;
    /// perm[v] = position of vertex v in the canonical ordering
    std::vector<int> perm;
};

namespace detail {

// bits_per_pair: 1 for graphs, 2 for digraphs. pair_bits(a, b) returns the
// bits for the ordered position pair (row a, column b) with a placed first.
inline CanonicalResult minimize_labeling(int n, const std::vector<std::int64_t>& key, int bits_per_pair,
                                         const std::function<std::uint64_t(int, int)>& pair_bits)
{
    const int total_bits = bits_per_pair * n * (n - 1) / 2;

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return key[static_cast<std::size_t>(a)] > key[static_cast<std::size_t>(b)];
    });
    // class_of_position[p]: vertices allowed at position p
    std::vector<VertexSet> allowed(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n;) {
        int q = p;
        VertexSet cls = 0;
        while (q < n && key[static_cast<std::size_t>(order[static_cast<std::size_t>(q)])] ==
                            key[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])]) {
            cls |= bit(order[static_cast<std::size_t>(q)]);
            ++q;
        }
        for (int i = p; i < q; ++i) allowed[static_cast<std::size_t>(i)] = cls;
        p = q;
    }

    std::vector<int> placed(static_cast<std::size_t>(n), -1);
    std::vector<int> best_placed;
    std::uint64_t best = 0;
    bool have_best = false;

    auto prefix = [&](std::uint64_t code, int len) -> std::uint64_t {
        return len == 0 ? 0 : code >> (total_bits - len);
    };

    std::function<void(int, VertexSet, std::uint64_t, int)> place = [&](int pos, VertexSet used,
                                                                       std::uint64_t code, int len) {
        if (pos == n) {
            if (!have_best || code < best) {
                best = code;
                best_placed = placed;
                have_best = true;
            }
            return;
        }
        for_each_vertex(allowed[static_cast<std::size_t>(pos)] & ~used, [&](int c) {
            std::uint64_t next = code;
            int next_len = len;
            for (int i = 0; i < pos; ++i) {
                next_len += bits_per_pair;
                next |= pair_bits(placed[static_cast<std::size_t>(i)], c) << (total_bits - next_len);
            }
            if (have_best && prefix(next, next_len) > prefix(best, next_len)) return;
            placed[static_cast<std::size_t>(pos)] = c;
            place(pos + 1, used | bit(c), next, next_len);
        });
    };
    place(0, 0, 0, 0);

    CanonicalResult result;
    result.code = {n, best};
    result.perm.assign(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) result.perm[static_cast<std::size_t>(best_placed[static_cast<std::size_t>(p)])] = p;
    return result;
}

inline std::string code_to_bytes(const CanonicalCode& c, int bits_per_pair)
{
    const int total = bits_per_pair * c.n * (c.n - 1) / 2;
    std::string out(1, static_cast<char>(c.n));
    for (int start = 0; start < total; start += 8) {
        unsigned char byte = 0;
        for (int i = 0; i < 8; ++i) {
            int k = start + i;
            byte = static_cast<unsigned char>(byte << 1);
            if (k < total && ((c.bits >> (total - 1 - k)) & 1U)) byte |= 1;
        }
        out.push_back(static_cast<char>(byte));
    }
    return out;
}

}  // namespace detail

inline CanonicalResult canonical_labeling(const Graph& g)
{
    if (g.order() > kCanonicalMaxVertices) {
        throw CapacityError("canonical form supports at most " + std::to_string(kCanonicalMaxVertices) +
                            " vertices");
    }
    std::vector<std::int64_t> key(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) key[static_cast<std::size_t>(v)] = g.degree(v);
    return detail::minimize_labeling(g.order(), key, 1,
                                     [&](int a, int b) -> std::uint64_t { return g.has_edge(a, b) ? 1 : 0; });
}

inline CanonicalCode canonical_code(const Graph& g) { return canonical_labeling(g).code; }

/// Canonical label as a byte string: vertex count, then the packed adjacency bits.
inline std::string canonical_form(const Graph& g) { return detail::code_to_bytes(canonical_code(g), 1); }

inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g).perm); }

inline bool isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

inline CanonicalResult canonical_labeling(const Digraph& d)
{
    if (d.order() > kDirectedCanonicalMaxVertices) {
        throw CapacityError("directed canonical form supports at most " +
                            std::to_string(kDirectedCanonicalMaxVertices) + " vertices");
    }
    std::vector<std::int64_t> key(static_cast<std::size_t>(d.order()));
    for (int v = 0; v < d.order(); ++v) key[static_cast<std::size_t>(v)] = d.out_degree(v) * 128 + d.in_degree(v);
    return detail::minimize_labeling(d.order(), key, 2, [&](int a, int b) -> std::uint64_t {
        return (d.has_arc(a, b) ? 2U : 0U) | (d.has_arc(b, a) ? 1U : 0U);
    });
}

inline CanonicalCode canonical_code(const Digraph& d) { return canonical_labeling(d).code; }

inline std::string canonical_form(const Digraph& d) { return detail::code_to_bytes(canonical_code(d), 2); }

inline Digraph canonical_digraph(const Digraph& d) { return relabel(d, canonical_labeling(d).perm); }

inline bool isomorphic(const Digraph& a, const Digraph& b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

/// One representative per isomorphism class among all 2^m orientations of g,
/// in canonical-code order. Requires m <= 30.
inline std::vector<Digraph> orientation_classes(const Graph& g)
{
    if (g.size() > 30) throw CapacityError("orientation classes need at most 30 edges");
    std::vector<std::pair<CanonicalCode, std::uint64_t>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
        seen.emplace_back(canonical_code(orient_mask(g, mask)), mask);
    }
    std::sort(seen.begin(), seen.end());
    std::vector<Digraph> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (i > 0 && seen[i].first == seen[i - 1].first) continue;
        out.push_back(orient_mask(g, seen[i].second));
    }
    return out;
}

}  // namespace dorient
