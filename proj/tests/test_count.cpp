#include "dorient/count.hpp"
#include "dorient/families.hpp"
#include "dorient/json_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dorient;

namespace {

Graph random_graph(int n, int max_edges, std::mt19937_64& rng)
{
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    int m = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min<int>(max_edges, static_cast<int>(all.size())) + 1));
    all.resize(static_cast<std::size_t>(m));
    return make_graph(n, all);
}

std::vector<int> random_perm(int n, std::mt19937_64& rng)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

const std::vector<Digraph>& small_patterns()
{
    static const std::vector<Digraph> ps{cyclic_triangle(),
                                         transitive_triangle(),
                                         make_digraph(3, {{0, 1}, {1, 2}}),
                                         named_digraph("star:2:in"),
                                         named_digraph("star:3:out"),
                                         make_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                                         named_digraph("bowtie:antidirected"),
                                         named_digraph("bowtie:all-in")};
    return ps;
}

// Inclusion-exclusion over the literal patterns: |union| = sum over nonempty
// subsets S of (-1)^{|S|+1} 2^{m - |literals of S|}, zero if S conflicts.
BigInt inclusion_exclusion_free(int m, const std::vector<ForbiddenPattern>& ps)
{
    BigInt containing = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << ps.size()); ++s) {
        std::vector<int> dir(static_cast<std::size_t>(m), -1);
        bool conflict = false;
        int fixed = 0;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (!(s >> i & 1)) continue;
            for (auto lit : ps[i].literals) {
                int& d = dir[static_cast<std::size_t>(lit.edge)];
                if (d == -1) {
                    d = lit.backward;
                    ++fixed;
                } else if (d != static_cast<int>(lit.backward)) {
                    conflict = true;
                }
            }
        }
        if (conflict) continue;
        BigInt term = pow2(static_cast<unsigned>(m - fixed));
        if (__builtin_popcountll(s) % 2 == 1) containing += term;
        else containing -= term;
    }
    return pow2(static_cast<unsigned>(m)) - containing;
}

}  // namespace

TEST(Patterns, SpecExamples)
{
    EXPECT_EQ(forbidden_patterns(complete_graph(3), cyclic_triangle()).size(), 2u);
    EXPECT_EQ(forbidden_patterns(complete_graph(3), transitive_triangle()).size(), 6u);
    EXPECT_TRUE(forbidden_patterns(turan_graph(4, 2), cyclic_triangle()).empty());
}

TEST(Patterns, WellFormed)
{
    auto ps = forbidden_patterns(complete_graph(5), named_digraph("bowtie:in-out"));
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    EXPECT_EQ(std::adjacent_find(ps.begin(), ps.end()), ps.end());
    for (const auto& p : ps) {
        EXPECT_EQ(p.literals.size(), 6u);
        for (std::size_t i = 1; i < p.literals.size(); ++i) EXPECT_LT(p.literals[i - 1].edge, p.literals[i].edge);
    }
}

TEST(Count, SpecExamples)
{
    auto k3c = count_hfree(complete_graph(3), cyclic_triangle());
    EXPECT_EQ(k3c.hfree, 6);
    EXPECT_EQ(k3c.total, 8);
    EXPECT_EQ(count_hfree(complete_graph(3), transitive_triangle()).hfree, 2);
    auto k4 = count_hfree(complete_graph(4), cyclic_triangle());
    EXPECT_EQ(k4.hfree, 24);
    EXPECT_EQ(k4.total, 64);
    EXPECT_EQ(k4.p_contains, Rational(5, 8));
}

TEST(Count, JsonSchema)
{
    auto r = count_hfree(complete_graph(4), cyclic_triangle());
    EXPECT_EQ(to_json(r).dump(), R"({"hfree":"24","total":"64","p_contains":"5/8"})");
    EXPECT_EQ(count_result_from_json(to_json(r)), r);
}

TEST(Naive, SpecExamples)
{
    Graph bowtie = fan_graph(2, 3);
    for (const char* name : {"bowtie:antidirected", "bowtie:all-in", "bowtie:in-out", "bowtie:three-in"})
        EXPECT_EQ(count_hfree_naive(bowtie, named_digraph(name)).hfree, count_hfree(bowtie, named_digraph(name)).hfree);
    // in-star with two leaves in a 3-leaf star: avoided iff at most one spoke points in
    Graph s3 = star_graph(3);
    Digraph in2 = named_digraph("star:2:in");
    EXPECT_EQ(forbidden_patterns(s3, in2).size(), 3u);
    EXPECT_EQ(inclusion_exclusion_free(3, forbidden_patterns(s3, in2)), 4);
    EXPECT_EQ(count_hfree_naive(s3, in2).hfree, 4);
    EXPECT_EQ(count_hfree(s3, in2).hfree, 4);
    // an edge in either direction is a copy of a single arc
    auto k2 = count_hfree_naive(complete_graph(2), named_digraph("arc"));
    EXPECT_EQ(k2.hfree, 0);
    EXPECT_EQ(k2.total, 2);
}

TEST(Count, MatchesNaiveAndInclusionExclusion)
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 4), 12, rng);
        const auto& h = small_patterns()[rng() % small_patterns().size()];
        auto fast = count_hfree(g, h);
        auto naive = count_hfree_naive(g, h);
        ASSERT_EQ(fast, naive) << to_string(g) << " " << to_string(h);
        auto ps = forbidden_patterns(g, h);
        if (ps.size() <= 14) {
            EXPECT_EQ(inclusion_exclusion_free(g.size(), ps), fast.hfree);
        }
    }
}

TEST(Count, PartitionIdentity)
{
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(6, 16, rng);
        const auto& h = small_patterns()[rng() % small_patterns().size()];
        BigInt containing = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask)
            if (contains_directed(orient_mask(g, mask), h)) ++containing;
        auto r = count_hfree(g, h);
        EXPECT_EQ(r.hfree + containing, pow2(static_cast<unsigned>(g.size())));
        EXPECT_EQ(r.p_contains, Rational(containing, r.total));
    }
}

TEST(Count, ReversalAndRelabelingInvariance)
{
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = random_graph(7, 16, rng);
        const auto& h = small_patterns()[rng() % small_patterns().size()];
        BigInt d = count_hfree(g, h).hfree;
        EXPECT_EQ(count_hfree(g, reversed(h)).hfree, d);
        EXPECT_EQ(count_hfree(relabel(g, random_perm(g.order(), rng)), h).hfree, d);
    }
}

TEST(Count, NoPatternsMeansEverything)
{
    EXPECT_EQ(count_hfree(turan_graph(8, 2), cyclic_triangle()).hfree, pow2(16));
    EXPECT_EQ(count_hfree(cycle_graph(9), named_digraph("bowtie:antidirected")).hfree, pow2(9));
}

TEST(Count, UpperEdgeMonotonicity)
{
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(6, 12, rng);
        const auto& h = small_patterns()[rng() % small_patterns().size()];
        BigInt d = count_hfree(g, h).hfree;
        for (int e = 0; e < g.size(); ++e) EXPECT_LE(d, 2 * count_hfree(without_edge(g, e), h).hfree);
    }
}

TEST(Count, LowerEdgeMonotonicityCanFail)
{
    // book with three pages: deleting the spine removes every triangle
    Graph book = join(complete_graph(2), empty_graph(3));
    int spine = book.edge_index(0, 1);
    EXPECT_EQ(count_hfree(book, cyclic_triangle()).hfree, 54);
    EXPECT_EQ(count_hfree(without_edge(book, spine), cyclic_triangle()).hfree, 64);
}

TEST(Count, ParallelDeterminism)
{
    Graph g = complete_graph(7);
    for (const auto& h : {cyclic_triangle(), named_digraph("bowtie:in-out")}) {
        BigInt serial = count_hfree(g, h).hfree;
        for (unsigned threads : {2u, 3u, 8u})
            for (int depth : {0, 3, 8, 12}) {
                CountOptions opt;
                opt.threads = threads;
                opt.split_depth = depth;
                EXPECT_EQ(count_hfree(g, h, opt).hfree, serial);
            }
    }
    EXPECT_EQ(count_hfree(complete_graph(7), cyclic_triangle()).hfree, 5040);
}

TEST(Count, Envelopes)
{
    EXPECT_THROW(count_hfree(complete_graph(10), cyclic_triangle()), CapacityError);
    EXPECT_THROW(count_hfree_naive(complete_graph(8), cyclic_triangle()), CapacityError);
    CountOptions force;
    force.force = true;
    EXPECT_EQ(count_hfree(turan_graph(10, 2), cyclic_triangle(), force).hfree, pow2(25));
}

TEST(Conditioned, SpecExamples)
{
    Graph k3 = complete_graph(3);
    PartialOrientation cyc(k3), trans(k3);
    const Digraph c = cyclic_triangle(), tt = transitive_triangle();
    for (auto a : c.arcs()) cyc.fix_arc(a.from, a.to);
    for (auto a : tt.arcs()) trans.fix_arc(a.from, a.to);
    auto absent = count_hfree_conditioned(k3, cyclic_triangle(), trans);
    EXPECT_EQ(absent.hfree, 1);
    EXPECT_EQ(absent.total, 1);
    EXPECT_EQ(count_hfree_conditioned(k3, cyclic_triangle(), cyc).hfree, 0);
    EXPECT_THROW(count_hfree_conditioned(complete_graph(4), cyclic_triangle(), cyc), GraphError);
}

TEST(Conditioned, LawOfTotalCount)
{
    Graph g = join(empty_graph(1), turan_graph(4, 2));
    for (const char* name : {"bowtie:all-in", "bowtie:in-out", "bowtie:antidirected"}) {
        Digraph h = named_digraph(name);
        BigInt sum = 0;
        const std::vector<int> chosen{0, 2, 5};
        for (int mask = 0; mask < 8; ++mask) {
            PartialOrientation p(g);
            for (int i = 0; i < 3; ++i)
                p.set_state(chosen[static_cast<std::size_t>(i)], mask >> i & 1 ? EdgeState::Backward : EdgeState::Forward);
            auto r = count_hfree_conditioned(g, h, p);
            EXPECT_EQ(r.total, pow2(static_cast<unsigned>(g.size() - 3)));
            sum += r.hfree;
        }
        EXPECT_EQ(sum, count_hfree(g, h).hfree);
    }
}

TEST(MonteCarlo, SpecExamples)
{
    auto none = mc_estimate(turan_graph(8, 2), cyclic_triangle(), 1000, 3);
    EXPECT_EQ(none.hits, 0u);
    EXPECT_EQ(none.estimate, 0);
    auto k3 = mc_estimate(complete_graph(3), cyclic_triangle(), 100000, 1);
    EXPECT_TRUE(within_sigmas(k3, Rational(1, 4), 5)) << to_decimal_string(k3.estimate);
    auto k4 = mc_estimate(complete_graph(4), cyclic_triangle(), 100000, 2);
    EXPECT_TRUE(within_sigmas(k4, count_hfree(complete_graph(4), cyclic_triangle()).p_contains, 5));
}

TEST(MonteCarlo, Reproducible)
{
    Graph g = fan_graph(3, 3);
    Digraph h = named_digraph("bowtie:antidirected");
    auto a = mc_estimate(g, h, 5000, 99), b = mc_estimate(g, h, 5000, 99), c = mc_estimate(g, h, 5000, 100);
    EXPECT_EQ(a.hits, b.hits);
    EXPECT_EQ(a.stderr_bound, b.stderr_bound);
    EXPECT_NE(a.hits, c.hits);
    EXPECT_THROW(mc_estimate(g, h, 0, 1), GraphError);
}

TEST(MonteCarlo, StderrBoundIsUpperSqrt)
{
    auto e = mc_estimate(complete_graph(4), cyclic_triangle(), 777, 5);
    EXPECT_GE(e.stderr_bound * e.stderr_bound, e.variance);
    Rational below = e.stderr_bound - Rational(1, BigInt("1000000000000"));
    EXPECT_LT(below * below, e.variance);
}
