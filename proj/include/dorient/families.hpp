#pragma once

// Named graph constructors and the text descriptors that select them.
//
// Vertex numbering is fixed so that callers can refer to specific vertices:
//   star:t       center 0, leaves 1..t (this is S_{t+1})
//   fan:k,r      center 0, blade b uses vertices 1+b(r-1) .. (b+1)(r-1)
//   wheel:m      hub 0, rim 1..m-1 in cyclic order
//   turan/multipartite parts occupy consecutive vertex ranges, larger parts first
//   path:k, cycle:k have k vertices numbered along the path/cycle
//   matching:k   edges (0,1), (2,3), ...

#include "dorient/graph.hpp"

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dorient {

inline Graph complete_graph(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return make_graph(n, pairs);
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_multipartite(const std::vector<int>& sizes)
{
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw GraphError("multipartite part sizes must be positive");
        n += s;
    }
    check_order(n);
    std::vector<int> part(static_cast<std::size_t>(n));
    int v = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int j = 0; j < sizes[i]; ++j) part[static_cast<std::size_t>(v++)] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)]) pairs.emplace_back(a, b);
    return make_graph(n, pairs);
}

/// Balanced part sizes for T(n,p); larger parts first. Parts may be empty when n < p.
inline std::vector<int> turan_part_sizes(int n, int p)
{
    std::vector<int> sizes(static_cast<std::size_t>(p), n / p);
    for (int i = 0; i < n % p; ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

inline Graph turan_graph(int n, int p)
{
    if (p < 1) throw GraphError("turan graph needs p >= 1");
    std::vector<int> sizes;
    for (int s : turan_part_sizes(n, p))
        if (s > 0) sizes.push_back(s);
    return complete_multipartite(sizes);
}

/// t(n,p): edges of the balanced complete p-partite graph on n vertices.
inline std::int64_t turan_count(std::int64_t n, std::int64_t p)
{
    if (n <= 0) return 0;
    std::int64_t q = n / p, r = n % p;
    // r parts of size q+1, p-r parts of size q
    std::int64_t sum_sq = r * (q + 1) * (q + 1) + (p - r) * q * q;
    return (n * n - sum_sq) / 2;
}

/// Excess over t(n, r-1) in the extremal number of the (k,r)-fan.
inline std::int64_t h_of_k(std::int64_t k)
{
    if (k < 1) throw GraphError("h(k) needs k >= 1");
    return k % 2 == 1 ? k * k - k : k * k - 3 * k / 2;
}

/// Disjoint copies of g and h plus every edge between them.
inline Graph join(const Graph& g, const Graph& h)
{
    if (g.order() + h.order() > kMaxVertices) throw CapacityError("join exceeds 64 vertices");
    auto pairs = edge_pairs(disjoint_union(g, h));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) pairs.emplace_back(a, g.order() + b);
    return make_graph(g.order() + h.order(), pairs);
}

inline Graph star_graph(int leaves)
{
    if (leaves < 1) throw GraphError("star needs at least one leaf");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
    return make_graph(leaves + 1, pairs);
}

inline Graph matching_graph(int k)
{
    if (k < 1) throw GraphError("matching needs k >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
    return make_graph(2 * k, pairs);
}

inline Graph path_graph(int k)
{
    if (k < 1) throw GraphError("path needs k >= 1 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
    return make_graph(k, pairs);
}

inline Graph cycle_graph(int k)
{
    if (k < 3) throw GraphError("cycle needs k >= 3 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
    return make_graph(k, pairs);
}

inline int fan_order(int k, int r) { return 1 + k * (r - 1); }

/// Non-center vertices of blade b of fan:k,r.
inline std::vector<int> fan_blade(int b, int r)
{
    std::vector<int> out;
    for (int j = 0; j < r - 1; ++j) out.push_back(1 + b * (r - 1) + j);
    return out;
}

inline Graph fan_graph(int k, int r)
{
    if (k < 1 || r < 2) throw GraphError("fan needs k >= 1 and r >= 2");
    if (fan_order(k, r) > kMaxVertices) throw CapacityError("fan exceeds 64 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < k; ++b) {
        auto blade = fan_blade(b, r);
        for (std::size_t i = 0; i < blade.size(); ++i) {
            pairs.emplace_back(0, blade[i]);
            for (std::size_t j = i + 1; j < blade.size(); ++j) pairs.emplace_back(blade[i], blade[j]);
        }
    }
    return make_graph(fan_order(k, r), pairs);
}

inline Graph wheel_graph(int m)
{
    if (m < 5 || m % 2 == 0) throw GraphError("wheel:m needs odd m >= 5");
    std::vector<std::pair<int, int>> pairs;
    int rim = m - 1;
    for (int i = 0; i < rim; ++i) {
        pairs.emplace_back(0, 1 + i);
        pairs.emplace_back(1 + i, 1 + (i + 1) % rim);
    }
    return make_graph(m, pairs);
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline int parse_int(std::string_view s, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
    }
    return value;
}

inline std::vector<int> parse_ints(std::string_view s, std::string_view what)
{
    std::vector<int> out;
    for (auto part : split(s, ',')) out.push_back(parse_int(part, what));
    return out;
}

inline void expect_count(const std::vector<int>& args, std::size_t n, std::string_view name)
{
    if (args.size() != n) {
        throw ParseError(std::string(name) + " expects " + std::to_string(n) + " parameter(s)");
    }
}

}  // namespace detail

/// Builds a graph from a descriptor such as "fan:2,3" or "turan:6,3".
inline Graph named_graph(std::string_view spec)
{
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    auto args = rest.empty() ? std::vector<int>{} : detail::parse_ints(rest, name);

    auto positive = [&](int v) {
        if (v < 1) throw GraphError(std::string(name) + " parameter must be positive");
        return v;
    };

    if (name == "bowtie") {
        detail::expect_count(args, 0, name);
        return fan_graph(2, 3);
    }
    if (name == "complete") {
        detail::expect_count(args, 1, name);
        return complete_graph(positive(args[0]));
    }
    if (name == "empty") {
        detail::expect_count(args, 1, name);
        return empty_graph(positive(args[0]));
    }
    if (name == "turan") {
        detail::expect_count(args, 2, name);
        return turan_graph(positive(args[0]), positive(args[1]));
    }
    if (name == "multipartite") {
        if (args.empty()) throw ParseError("multipartite expects part sizes");
        return complete_multipartite(args);
    }
    if (name == "star") {
        detail::expect_count(args, 1, name);
        return star_graph(args[0]);
    }
    if (name == "matching") {
        detail::expect_count(args, 1, name);
        return matching_graph(args[0]);
    }
    if (name == "path") {
        detail::expect_count(args, 1, name);
        return path_graph(args[0]);
    }
    if (name == "cycle") {
        detail::expect_count(args, 1, name);
        return cycle_graph(args[0]);
    }
    if (name == "fan") {
        detail::expect_count(args, 2, name);
        return fan_graph(args[0], args[1]);
    }
    if (name == "wheel") {
        detail::expect_count(args, 1, name);
        return wheel_graph(args[0]);
    }
    throw ParseError("unknown graph descriptor '" + std::string(spec) + "'");
}

// Oriented patterns.

inline Digraph cyclic_triangle() { return make_digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Digraph transitive_triangle() { return make_digraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

enum class BladeStyle { Cyclic, Transitive };

/// Anti-directed fan orientation. In each blade with non-center vertices
/// x_1..x_{r-1}: Cyclic uses 0->x_1 and x_i->0 (i>=2); Transitive uses
/// x_1->0 and 0->x_i (i>=2). Non-center pairs always go x_i->x_j for i<j.
/// For r = 3 these blades are the cyclic triangle and the transitive triangle
/// with the center in the middle.
inline Digraph antidirected_fan(int k, int r, BladeStyle style)
{
    if (r < 3) throw GraphError("an anti-directed fan needs r >= 3");
    Graph base = fan_graph(k, r);
    std::vector<std::pair<int, int>> arcs;
    for (int b = 0; b < k; ++b) {
        auto blade = fan_blade(b, r);
        for (std::size_t i = 0; i < blade.size(); ++i) {
            bool out_of_center = (i == 0) == (style == BladeStyle::Cyclic);
            if (out_of_center) arcs.emplace_back(0, blade[i]);
            else arcs.emplace_back(blade[i], 0);
            for (std::size_t j = i + 1; j < blade.size(); ++j) arcs.emplace_back(blade[i], blade[j]);
        }
    }
    return make_digraph(base.order(), arcs);
}

/// Bowtie with center 0 and triangles {0,1,2}, {0,3,4}; spokes directed per
/// the four flags (true = into the center); rim arcs 1->2 and 3->4.
inline Digraph bowtie_with_spokes(bool s1_in, bool s2_in, bool s3_in, bool s4_in)
{
    std::vector<std::pair<int, int>> arcs;
    auto spoke = [&](int v, bool in) {
        if (in) arcs.emplace_back(v, 0);
        else arcs.emplace_back(0, v);
    };
    spoke(1, s1_in);
    spoke(2, s2_in);
    spoke(3, s3_in);
    spoke(4, s4_in);
    arcs.emplace_back(1, 2);
    arcs.emplace_back(3, 4);
    return make_digraph(5, arcs);
}

/// Star with `leaves` leaves; leaf i points into the center when in[i].
inline Digraph oriented_star(const std::vector<bool>& in)
{
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t i = 0; i < in.size(); ++i) {
        int leaf = static_cast<int>(i) + 1;
        if (in[i]) arcs.emplace_back(leaf, 0);
        else arcs.emplace_back(0, leaf);
    }
    return make_digraph(static_cast<int>(in.size()) + 1, arcs);
}

/// Oriented-pattern descriptors:
///   triangle:cyclic, triangle:transitive
///   bowtie:antidirected, bowtie:all-in, bowtie:all-out, bowtie:in-out, bowtie:three-in
///   fan:k,r:antidirected-cyclic, fan:k,r:antidirected-transitive
///   star:k:in, star:k:out, arc
inline Digraph named_digraph(std::string_view spec)
{
    auto fields = detail::split(spec, ':');
    auto name = fields[0];
    if (name == "arc" && fields.size() == 1) return make_digraph(2, {{0, 1}});
    if (name == "triangle" && fields.size() == 2) {
        if (fields[1] == "cyclic") return cyclic_triangle();
        if (fields[1] == "transitive") return transitive_triangle();
    }
    if (name == "bowtie" && fields.size() == 2) {
        auto kind = fields[1];
        if (kind == "antidirected") return antidirected_fan(2, 3, BladeStyle::Cyclic);
        if (kind == "all-in") return bowtie_with_spokes(true, true, true, true);
        if (kind == "all-out") return bowtie_with_spokes(false, false, false, false);
        if (kind == "in-out") return bowtie_with_spokes(true, true, false, false);
        if (kind == "three-in") return bowtie_with_spokes(true, true, true, false);
    }
    if (name == "fan" && fields.size() == 3) {
        auto kr = detail::parse_ints(fields[1], "fan");
        detail::expect_count(kr, 2, "fan");
        if (fields[2] == "antidirected-cyclic") return antidirected_fan(kr[0], kr[1], BladeStyle::Cyclic);
        if (fields[2] == "antidirected-transitive") return antidirected_fan(kr[0], kr[1], BladeStyle::Transitive);
    }
    if (name == "star" && fields.size() == 3) {
        int leaves = detail::parse_int(fields[1], "star");
        if (leaves < 1) throw GraphError("star needs at least one leaf");
        if (fields[2] == "in") return oriented_star(std::vector<bool>(static_cast<std::size_t>(leaves), true));
        if (fields[2] == "out") return oriented_star(std::vector<bool>(static_cast<std::size_t>(leaves), false));
    }
    throw ParseError("unknown oriented pattern descriptor '" + std::string(spec) + "'");
}

}  // namespace dorient
