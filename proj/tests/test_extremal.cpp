#include "dorient/canonical.hpp"
#include "dorient/extremal.hpp"
#include "dorient/families.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace dorient;

namespace {

std::vector<Graph> labeled_graphs(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) pairs.push_back(slots[i]);
        out.push_back(make_graph(n, pairs));
    }
    return out;
}

std::set<CanonicalCode> codes(const std::vector<Graph>& gs)
{
    std::set<CanonicalCode> out;
    for (const auto& g : gs) out.insert(canonical_code(g));
    return out;
}

}  // namespace

TEST(Extremal, SpecExamples)
{
    auto k3 = extremal_number(5, {complete_graph(3)});
    EXPECT_EQ(k3.max_edges, 6);
    ASSERT_EQ(k3.witnesses.size(), 1u);
    EXPECT_TRUE(isomorphic(k3.witnesses[0], turan_graph(5, 2)));
    EXPECT_EQ(extremal_number(6, {complete_graph(4)}).max_edges, 12);
    for (int n = 4; n <= 7; ++n) EXPECT_EQ(extremal_number(n, {star_graph(2), matching_graph(2)}).max_edges, 1) << n;
    EXPECT_EQ(extremal_number(6, {fan_graph(2, 3)}).max_edges, 10);
    EXPECT_EQ(extremal_number(7, {wheel_graph(7)}).max_edges, 17);
}

TEST(Extremal, Errors)
{
    EXPECT_THROW(extremal_number(8, {complete_graph(3)}), CapacityError);
    EXPECT_THROW(extremal_number(5, {}), GraphError);
    EXPECT_THROW(extremal_number(5, {empty_graph(3)}), GraphError);
    EXPECT_THROW(max_d(7, cyclic_triangle()), CapacityError);
}

TEST(Extremal, MatchesLabeledBruteForce)
{
    const std::vector<std::vector<Graph>> families{{complete_graph(3)},
                                                   {cycle_graph(4)},
                                                   {star_graph(3)},
                                                   {path_graph(4)},
                                                   {star_graph(2), matching_graph(2)},
                                                   {complete_graph(3), cycle_graph(4)}};
    for (int n = 3; n <= 5; ++n) {
        auto graphs = labeled_graphs(n);
        for (const auto& fam : families) {
            int best = -1;
            std::vector<Graph> best_graphs;
            for (const auto& g : graphs) {
                bool free = true;
                for (const auto& f : fam)
                    if (f.order() <= n && contains_undirected(g, f)) free = false;
                if (!free) continue;
                if (g.size() > best) {
                    best = g.size();
                    best_graphs.clear();
                }
                if (g.size() == best) best_graphs.push_back(g);
            }
            auto r = extremal_number(n, fam);
            EXPECT_EQ(r.max_edges, best);
            EXPECT_EQ(codes(r.witnesses), codes(best_graphs));
        }
    }
}

TEST(Extremal, TuranValues)
{
    for (int p = 2; p <= 3; ++p)
        for (int n = p + 1; n <= 7; ++n) {
            auto r = extremal_number(n, {complete_graph(p + 1)});
            EXPECT_EQ(r.max_edges, turan_count(n, p)) << n << " " << p;
            ASSERT_EQ(r.witnesses.size(), 1u);
            EXPECT_TRUE(isomorphic(r.witnesses[0], turan_graph(n, p)));
        }
}

TEST(Extremal, WitnessesAreSaturated)
{
    for (const auto& fam : std::vector<std::vector<Graph>>{{fan_graph(2, 3)}, {cycle_graph(5)}, {complete_graph(4)}}) {
        auto r = extremal_number(6, fam);
        for (const auto& w : r.witnesses) {
            EXPECT_EQ(w.size(), r.max_edges);
            EXPECT_TRUE(is_free_of(w, fam));
            for (int u = 0; u < w.order(); ++u)
                for (int v = u + 1; v < w.order(); ++v)
                    if (!w.has_edge(u, v)) {
                        EXPECT_FALSE(is_free_of(with_edge(w, u, v), fam));
                    }
        }
    }
}

TEST(Extremal, ClassCountsOnSmallOrders)
{
    auto all = [](const Graph&) { return true; };
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::size_t total = 0;
        for (const auto& level : graph_classes(n, all)) total += level.size();
        EXPECT_EQ(total, expected[static_cast<std::size_t>(n - 1)]) << n;
    }
}

TEST(MaxD, FrozenValues)
{
    auto c4 = max_d(4, cyclic_triangle());
    EXPECT_EQ(c4.max_count, 24);
    ASSERT_EQ(c4.witnesses.size(), 1u);
    EXPECT_TRUE(isomorphic(c4.witnesses[0], complete_graph(4)));
    auto t4 = max_d(4, transitive_triangle());
    EXPECT_EQ(t4.max_count, 16);
    ASSERT_EQ(t4.witnesses.size(), 1u);
    EXPECT_TRUE(isomorphic(t4.witnesses[0], cycle_graph(4)));
    EXPECT_EQ(max_d(5, cyclic_triangle()).max_count, 120);
    EXPECT_EQ(max_d(5, transitive_triangle()).max_count, 64);
    EXPECT_EQ(max_d(5, named_digraph("bowtie:antidirected")).max_count, 600);
    auto allin = max_d(5, named_digraph("bowtie:all-in"));
    EXPECT_EQ(allin.max_count, 704);
    ASSERT_EQ(allin.witnesses.size(), 1u);
    EXPECT_TRUE(isomorphic(allin.witnesses[0], complete_graph(5)));
    EXPECT_EQ(max_d(6, cyclic_triangle()).max_count, 720);
}

TEST(MaxD, MatchesLabeledBruteForce)
{
    for (int n = 3; n <= 5; ++n)
        for (const auto& h : {cyclic_triangle(), transitive_triangle(), named_digraph("star:2:in"),
                              make_digraph(3, {{0, 1}, {1, 2}})}) {
            BigInt best = 0;
            std::vector<Graph> winners;
            for (const auto& g : labeled_graphs(n)) {
                BigInt d = count_hfree_naive(g, h).hfree;
                if (d > best) {
                    best = d;
                    winners.clear();
                }
                if (d == best) winners.push_back(g);
            }
            auto r = max_d(n, h);
            EXPECT_EQ(r.max_count, best) << n << " " << to_string(h);
            EXPECT_EQ(codes(r.witnesses), codes(winners));
        }
}

TEST(MaxD, PruningDoesNotChangeAnswer)
{
    for (int n = 3; n <= 5; ++n)
        for (const auto& h : {cyclic_triangle(), named_digraph("bowtie:in-out"), named_digraph("star:3:out")}) {
            SearchOptions full;
            full.prune = false;
            auto a = max_d(n, h), b = max_d(n, h, full);
            EXPECT_EQ(a.max_count, b.max_count);
            EXPECT_EQ(codes(a.witnesses), codes(b.witnesses));
            EXPECT_EQ(b.counted, b.classes);
            EXPECT_LE(a.counted, a.classes);
        }
}

TEST(MaxD, AtLeastTwoToTheExtremalNumber)
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& h : {cyclic_triangle(), transitive_triangle(), named_digraph("bowtie:three-in")}) {
            int ex = extremal_number(n, {underlying(h)}).max_edges;
            EXPECT_GE(max_d(n, h).max_count, pow2(static_cast<unsigned>(ex)));
        }
}

TEST(MaxD, ReversalInvariance)
{
    for (const auto& h : {named_digraph("bowtie:three-in"), named_digraph("star:2:in"), transitive_triangle()})
        for (int n = 4; n <= 5; ++n) {
            auto a = max_d(n, h), b = max_d(n, reversed(h));
            EXPECT_EQ(a.max_count, b.max_count);
            EXPECT_EQ(codes(a.witnesses), codes(b.witnesses));
        }
}

TEST(MaxD, ThreadCountDoesNotMatter)
{
    Digraph h = named_digraph("bowtie:in-out");
    auto serial = max_d(6, h);
    for (unsigned threads : {2u, 8u}) {
        SearchOptions opt;
        opt.threads = threads;
        auto r = max_d(6, h, opt);
        EXPECT_EQ(r.max_count, serial.max_count);
        EXPECT_EQ(codes(r.witnesses), codes(serial.witnesses));
        ASSERT_EQ(r.witnesses.size(), serial.witnesses.size());
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) EXPECT_EQ(r.witnesses[i], serial.witnesses[i]);
    }
}

TEST(MaxD, ProgressLines)
{
    std::ostringstream log;
    SearchOptions opt;
    opt.progress = &log;
    max_d(4, cyclic_triangle(), opt);
    EXPECT_NE(log.str().find("edges 6: 1 classes, best so far 24"), std::string::npos);
}

TEST(LowerBound, Examples)
{
    auto c = lower_bound_check(5, cyclic_triangle());
    EXPECT_EQ(c.exponent, 6);
    EXPECT_TRUE(isomorphic(c.witness, turan_graph(5, 2)));
    EXPECT_TRUE(c.holds);
    auto b = lower_bound_check(6, named_digraph("bowtie:antidirected"));
    EXPECT_EQ(b.exponent, 10);
    EXPECT_TRUE(b.holds);
    EXPECT_EQ(b.witness_count, pow2(10));
}
