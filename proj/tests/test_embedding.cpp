#include "dorient/canonical.hpp"
#include "dorient/embedding.hpp"
#include "dorient/families.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace dorient;

namespace {

Graph random_graph(int n, double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) pairs.emplace_back(u, v);
    return make_graph(n, pairs);
}

Digraph random_orientation(const Graph& g, std::mt19937_64& rng) { return orient_mask(g, rng()); }

// Every injective map, checked edge by edge.
std::vector<std::vector<int>> brute_maps(int pattern_n, int host_n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> hosts(static_cast<std::size_t>(host_n));
    std::iota(hosts.begin(), hosts.end(), 0);
    std::vector<int> pick(static_cast<std::size_t>(host_n), 0);
    std::fill(pick.begin(), pick.begin() + pattern_n, 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> chosen;
        for (int i = 0; i < host_n; ++i)
            if (pick[static_cast<std::size_t>(i)]) chosen.push_back(i);
        do out.push_back(chosen);
        while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

std::size_t brute_count(const Graph& pattern, const Graph& host)
{
    std::size_t c = 0;
    for (const auto& m : brute_maps(pattern.order(), host.order())) {
        bool ok = true;
        for (auto e : pattern.edges())
            ok = ok && host.has_edge(m[static_cast<std::size_t>(e.u)], m[static_cast<std::size_t>(e.v)]);
        c += ok;
    }
    return c;
}

bool brute_directed(const Digraph& host, const Digraph& pattern)
{
    if (pattern.order() > host.order()) return false;
    for (const auto& m : brute_maps(pattern.order(), host.order())) {
        bool ok = true;
        for (auto a : pattern.arcs())
            ok = ok && host.has_arc(m[static_cast<std::size_t>(a.from)], m[static_cast<std::size_t>(a.to)]);
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST(Embeddings, SpecExamples)
{
    EXPECT_EQ(embeddings_undirected(complete_graph(3), complete_graph(4)).size(), 24u);
    EXPECT_TRUE(embeddings_undirected(matching_graph(2), star_graph(3)).empty());
    EXPECT_EQ(embeddings_undirected(path_graph(3), complete_graph(3)).size(), 6u);
}

TEST(Embeddings, SortedAndLimited)
{
    auto all = embeddings_undirected(complete_graph(3), complete_graph(5));
    EXPECT_EQ(all.size(), 60u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    auto few = embeddings_undirected(complete_graph(3), complete_graph(5), 7);
    EXPECT_EQ(few.size(), 7u);
    EXPECT_TRUE(embeddings_undirected(complete_graph(3), complete_graph(5), 0).empty());
    for (const auto& e : few) EXPECT_TRUE(is_valid_embedding(complete_graph(3), complete_graph(5), e));
}

TEST(Embeddings, MatchBruteForce)
{
    std::mt19937_64 rng(29);
    std::vector<Graph> patterns{path_graph(3), complete_graph(3), star_graph(3), matching_graph(2), cycle_graph(4),
                                path_graph(4)};
    for (int trial = 0; trial < 40; ++trial) {
        Graph host = random_graph(4 + static_cast<int>(rng() % 3), 0.55, rng);
        for (const auto& p : patterns) {
            if (p.order() > host.order()) continue;
            auto count = embeddings_undirected(p, host).size();
            EXPECT_EQ(count, brute_count(p, host));
            EXPECT_EQ(contains_undirected(host, p), count > 0);
        }
    }
}

TEST(Embeddings, CountIsImagesTimesAutomorphisms)
{
    // C4 in K4: 3 images, |Aut(C4)| = 8
    EXPECT_EQ(embeddings_undirected(cycle_graph(4), complete_graph(4)).size(), 24u);
    // bowtie in K5: 15 images, |Aut| = 8
    EXPECT_EQ(embeddings_undirected(fan_graph(2, 3), complete_graph(5)).size(), 120u);
    std::set<std::vector<Edge>> images;
    const Graph cherry = star_graph(2);
    for (const auto& e : embeddings_undirected(cherry, cycle_graph(5))) {
        std::vector<Edge> img;
        for (auto ed : cherry.edges()) {
            int a = e.map[static_cast<std::size_t>(ed.u)], b = e.map[static_cast<std::size_t>(ed.v)];
            img.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(img.begin(), img.end());
        images.insert(img);
    }
    EXPECT_EQ(images.size() * 2, embeddings_undirected(star_graph(2), cycle_graph(5)).size());
}

TEST(Directed, SpecExamples)
{
    EXPECT_TRUE(contains_directed(cyclic_triangle(), cyclic_triangle()));
    EXPECT_FALSE(contains_directed(transitive_triangle(), cyclic_triangle()));
    Graph k4 = complete_graph(4);
    for (std::uint64_t mask = 0; mask < 64; ++mask) EXPECT_TRUE(contains_directed(orient_mask(k4, mask), transitive_triangle()));
}

TEST(Directed, MatchesBruteForceAndReversal)
{
    std::mt19937_64 rng(31);
    std::vector<Digraph> patterns{cyclic_triangle(), transitive_triangle(), named_digraph("star:2:in"),
                                  make_digraph(3, {{0, 1}, {1, 2}}), named_digraph("bowtie:antidirected")};
    for (int trial = 0; trial < 60; ++trial) {
        Digraph host = random_orientation(random_graph(5 + static_cast<int>(rng() % 2), 0.6, rng), rng);
        for (const auto& p : patterns) {
            bool c = contains_directed(host, p);
            EXPECT_EQ(c, brute_directed(host, p));
            EXPECT_EQ(c, contains_directed(reversed(host), reversed(p)));
        }
    }
}

TEST(Flexible, SpecExamples)
{
    PartialOrientation free_k3(complete_graph(3));
    EXPECT_TRUE(contains_directed_flexible(free_k3, cyclic_triangle()));
    auto fixed = make_partial(3, {}, {{0, 1}, {0, 2}, {1, 2}});
    EXPECT_FALSE(contains_directed_flexible(fixed, cyclic_triangle()));
    // in-star fixed on 0 <- 1, 0 <- 2; vertex 3 hangs off by free edges
    auto star = make_partial(4, {{1, 3}, {2, 3}}, {{1, 0}, {2, 0}});
    EXPECT_FALSE(contains_directed_flexible(star, named_digraph("star:3:out")));
    auto bare = make_partial(3, {}, {{1, 0}, {2, 0}});
    EXPECT_FALSE(contains_directed_flexible(bare, named_digraph("star:2:out")));
    EXPECT_TRUE(contains_directed_flexible(star, named_digraph("star:2:out")));
}

TEST(Flexible, NoFreeEdgesMatchesDirected)
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(5, 0.6, rng);
        Digraph d = random_orientation(g, rng);
        PartialOrientation p(g);
        for (auto a : d.arcs()) p.fix_arc(a.from, a.to);
        for (const auto& pat : {cyclic_triangle(), transitive_triangle(), named_digraph("star:2:in")})
            EXPECT_EQ(contains_directed_flexible(p, pat), contains_directed(d, pat));
    }
}

TEST(Flexible, AllFreeMatchesUndirected)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(6, 0.5, rng);
        PartialOrientation p(g);
        Digraph b = named_digraph("bowtie:all-in");
        EXPECT_EQ(contains_directed_flexible(p, b), contains_undirected(g, underlying(b)));
        auto found = find_embedding_flexible(p, b);
        EXPECT_EQ(found.has_value(), contains_undirected(g, underlying(b)));
        if (found) {
            EXPECT_TRUE(is_valid_embedding(underlying(b), g, *found));
        }
    }
}
