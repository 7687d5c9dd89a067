#pragma once

// Counting orientations of a graph that avoid a directed pattern.
//
// Containment is reduced to literal patterns: each embedding of the pattern's
// underlying graph into G yields the set of (edge, direction) literals that
// would realise the pattern there. An orientation contains the pattern iff it
// extends at least one literal pattern. The exact counter walks the edge
// assignment tree; a literal pattern dies once any literal is violated, a
// branch is cut as soon as some pattern has every literal satisfied, and once
// no pattern is alive the remaining edges contribute a power of two.

#include "dorient/embedding.hpp"
#include "dorient/exact.hpp"
#include "dorient/graph.hpp"
#include "dorient/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dorient {

inline constexpr int kExactMaxEdges = 40;
inline constexpr int kNaiveMaxEdges = 24;
inline constexpr int kEngineHardMaxEdges = 62;

struct Literal {
    int edge;
    /// orientation bit the edge must take (0: u->v with u<v)
    bool backward;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct ForbiddenPattern {
    /// sorted by edge, at most one literal per edge
    std::vector<Literal> literals;
    friend auto operator<=>(const ForbiddenPattern&, const ForbiddenPattern&) = default;
};

/// Literal pattern for one embedding (map[x] = host vertex of pattern vertex x).
inline ForbiddenPattern pattern_for_map(const Graph& g, const Digraph& h, const std::vector<int>& map)
{
    ForbiddenPattern p;
    for (auto a : h.arcs()) {
        int from = map[static_cast<std::size_t>(a.from)], to = map[static_cast<std::size_t>(a.to)];
        int idx = g.edge_index(from, to);
        p.literals.push_back({idx, from > to});
    }
    std::sort(p.literals.begin(), p.literals.end());
    return p;
}

inline void sort_unique(std::vector<ForbiddenPattern>& ps)
{
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

/// Literal patterns for the embeddings accepted by keep(map), deduplicated
/// and sorted.
template <typename Keep>
std::vector<ForbiddenPattern> forbidden_patterns_if(const Graph& g, const Digraph& h, Keep&& keep)
{
    std::vector<ForbiddenPattern> out;
    if (h.order() > g.order()) return out;
    for_each_embedding(underlying(h), g, [&](const std::vector<int>& map) {
        if (keep(map)) out.push_back(pattern_for_map(g, h, map));
        return true;
    });
    sort_unique(out);
    return out;
}

/// One literal pattern per embedding of H's underlying graph into G.
inline std::vector<ForbiddenPattern> forbidden_patterns(const Graph& g, const Digraph& h)
{
    return forbidden_patterns_if(g, h, [](const std::vector<int>&) { return true; });
}

/// True iff the orientation (one bit per edge) extends p.
template <typename Bits>
bool extends(const Bits& bits, const ForbiddenPattern& p)
{
    for (auto lit : p.literals)
        if (static_cast<bool>(bits[static_cast<std::size_t>(lit.edge)]) != lit.backward) return false;
    return true;
}

struct CountOptions {
    /// worker threads; 0 means hardware concurrency
    unsigned threads = 1;
    /// depth at which the assignment tree is cut into independent tasks
    int split_depth = 8;
    /// allow instances beyond the documented envelope
    bool force = false;
};

namespace detail {

class AvoidanceCounter {
public:
    // fixed may be empty (every edge free) or hold one state per edge.
    AvoidanceCounter(int m, const std::vector<ForbiddenPattern>& patterns, const std::vector<EdgeState>& fixed)
    {
        std::vector<int> position(static_cast<std::size_t>(m), -1);
        std::vector<std::vector<Literal>> reduced;
        for (const auto& p : patterns) {
            std::vector<Literal> rest;
            bool dead = false;
            for (auto lit : p.literals) {
                if (lit.edge < 0 || lit.edge >= m) throw GraphError("literal refers to a missing edge");
                EdgeState s = fixed.empty() ? EdgeState::Free : fixed[static_cast<std::size_t>(lit.edge)];
                if (s == EdgeState::Free) rest.push_back(lit);
                else if ((s == EdgeState::Backward) != lit.backward) dead = true;
            }
            if (dead) continue;
            if (rest.empty()) {
                forced_zero_ = true;
                return;
            }
            reduced.push_back(std::move(rest));
        }
        for (int e = 0; e < m; ++e)
            if (fixed.empty() || fixed[static_cast<std::size_t>(e)] == EdgeState::Free) ++free_;
        if (free_ > kEngineHardMaxEdges) throw CapacityError("exact counter supports at most 62 free edges");

        // Greedy edge order: prefer edges that finish patterns soonest.
        std::vector<std::vector<int>> by_edge(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < reduced.size(); ++i)
            for (auto lit : reduced[i]) by_edge[static_cast<std::size_t>(lit.edge)].push_back(static_cast<int>(i));
        std::vector<int> remaining(reduced.size());
        for (std::size_t i = 0; i < reduced.size(); ++i) remaining[i] = static_cast<int>(reduced[i].size());
        std::vector<bool> placed(static_cast<std::size_t>(m), false);
        for (int e = 0; e < m; ++e)
            if (!fixed.empty() && fixed[static_cast<std::size_t>(e)] != EdgeState::Free) placed[static_cast<std::size_t>(e)] = true;
        for (int step = 0; step < free_; ++step) {
            int best = -1;
            std::tuple<int, int, int> best_score{-1, -1, -1};
            for (int e = 0; e < m; ++e) {
                if (placed[static_cast<std::size_t>(e)]) continue;
                int finishing = 0, touched = 0;
                for (int pi : by_edge[static_cast<std::size_t>(e)]) {
                    int r = remaining[static_cast<std::size_t>(pi)];
                    if (r == 1) ++finishing;
                    if (r < static_cast<int>(reduced[static_cast<std::size_t>(pi)].size())) ++touched;
                }
                std::tuple<int, int, int> score{finishing, touched,
                                                static_cast<int>(by_edge[static_cast<std::size_t>(e)].size())};
                if (score > best_score) {
                    best_score = score;
                    best = e;
                }
            }
            placed[static_cast<std::size_t>(best)] = true;
            position[static_cast<std::size_t>(best)] = step;
            for (int pi : by_edge[static_cast<std::size_t>(best)]) --remaining[static_cast<std::size_t>(pi)];
        }

        occ_.assign(static_cast<std::size_t>(free_), {});
        length_.resize(reduced.size());
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            length_[i] = static_cast<int>(reduced[i].size());
            for (auto lit : reduced[i])
                occ_[static_cast<std::size_t>(position[static_cast<std::size_t>(lit.edge)])].push_back(
                    {static_cast<int>(i), lit.backward});
        }
    }

    int free_edges() const { return free_; }

    BigInt count(const CountOptions& opt) const
    {
        if (forced_zero_) return 0;
        if (length_.empty()) return pow2(static_cast<unsigned>(free_));
        int depth = std::clamp(opt.split_depth, 0, free_);
        std::size_t tasks = std::size_t{1} << depth;
        std::vector<std::uint64_t> partial(tasks, 0);
        parallel_for(tasks, opt.threads, [&](std::size_t t) {
            State s(*this);
            bool ok = true;
            for (int pos = 0; pos < depth; ++pos) {
                bool value = (t >> (depth - 1 - pos)) & 1U;
                if (!s.assign(pos, value)) ok = false;
            }
            partial[t] = ok ? s.dfs(depth) : 0;
        });
        BigInt total = 0;
        for (auto c : partial) total += c;
        return total;
    }

private:
    struct Occurrence {
        int pattern;
        bool backward;
    };

    struct State {
        const AvoidanceCounter& c;
        std::vector<int> satisfied;
        std::vector<int> violated;
        int alive;

        explicit State(const AvoidanceCounter& counter)
            : c(counter),
              satisfied(counter.length_.size(), 0),
              violated(counter.length_.size(), 0),
              alive(static_cast<int>(counter.length_.size()))
        {
        }

        // Returns false when some live pattern becomes fully satisfied.
        bool assign(int pos, bool value)
        {
            bool ok = true;
            for (auto o : c.occ_[static_cast<std::size_t>(pos)]) {
                auto p = static_cast<std::size_t>(o.pattern);
                if (o.backward == value) {
                    if (++satisfied[p] == c.length_[p] && violated[p] == 0) ok = false;
                } else if (violated[p]++ == 0) {
                    --alive;
                }
            }
            return ok;
        }

        void unassign(int pos, bool value)
        {
            for (auto o : c.occ_[static_cast<std::size_t>(pos)]) {
                auto p = static_cast<std::size_t>(o.pattern);
                if (o.backward == value) --satisfied[p];
                else if (--violated[p] == 0) ++alive;
            }
        }

        std::uint64_t dfs(int pos)
        {
            if (alive == 0) return std::uint64_t{1} << (c.free_ - pos);
            if (pos == c.free_) return 1;
            std::uint64_t total = 0;
            for (bool value : {false, true}) {
                if (assign(pos, value)) total += dfs(pos + 1);
                unassign(pos, value);
            }
            return total;
        }
    };

    int free_ = 0;
    bool forced_zero_ = false;
    std::vector<std::vector<Occurrence>> occ_;
    std::vector<int> length_;
};

}  // namespace detail

/// Number of assignments to the free edges (all m edges when `fixed` is
/// empty) that extend none of the patterns.
inline BigInt count_avoiding(int m, const std::vector<ForbiddenPattern>& patterns,
                             const std::vector<EdgeState>& fixed = {}, const CountOptions& opt = {})
{
    return detail::AvoidanceCounter(m, patterns, fixed).count(opt);
}

struct CountResult {
    BigInt hfree;
    BigInt total;
    Rational p_contains;

    static CountResult from_counts(BigInt hfree, BigInt total)
    {
        Rational p(total - hfree, total);
        return {std::move(hfree), std::move(total), std::move(p)};
    }

    friend bool operator==(const CountResult&, const CountResult&) = default;
};

inline void check_exact_envelope(int m, const CountOptions& opt)
{
    if (m > kExactMaxEdges && !opt.force) {
        throw CapacityError("exact counting supports at most " + std::to_string(kExactMaxEdges) + " edges (got " +
                            std::to_string(m) + "); use Monte Carlo (--mc) or --force");
    }
    if (m > kEngineHardMaxEdges) throw CapacityError("exact counting cannot exceed 62 edges even with --force");
}

/// D(G, H): orientations of G containing no copy of H.
inline CountResult count_hfree(const Graph& g, const Digraph& h, const CountOptions& opt = {})
{
    check_exact_envelope(g.size(), opt);
    auto patterns = forbidden_patterns(g, h);
    BigInt free_count = count_avoiding(g.size(), patterns, {}, opt);
    return CountResult::from_counts(free_count, pow2(static_cast<unsigned>(g.size())));
}

/// Reference count: every orientation is built and searched directly.
inline CountResult count_hfree_naive(const Graph& g, const Digraph& h)
{
    if (g.size() > kNaiveMaxEdges) {
        throw CapacityError("naive counting supports at most " + std::to_string(kNaiveMaxEdges) + " edges");
    }
    std::uint64_t free_count = 0;
    const std::uint64_t total = std::uint64_t{1} << g.size();
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (!contains_directed(orient_mask(g, mask), h)) ++free_count;
    return CountResult::from_counts(BigInt(free_count), BigInt(total));
}

/// Count over the free edges of `fixed`, with its fixed arcs frozen.
inline CountResult count_hfree_conditioned(const Graph& g, const Digraph& h, const PartialOrientation& fixed,
                                           const CountOptions& opt = {})
{
    if (!(fixed.base() == g)) throw GraphError("partial orientation is not over the given graph");
    int free_edges = static_cast<int>(fixed.free_indices().size());
    check_exact_envelope(free_edges, opt);
    auto patterns = forbidden_patterns(g, h);
    BigInt free_count = count_avoiding(g.size(), patterns, fixed.states(), opt);
    return CountResult::from_counts(free_count, pow2(static_cast<unsigned>(free_edges)));
}

struct McEstimate {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    /// fraction of sampled orientations containing H
    Rational estimate;
    /// p(1-p)/samples with p the estimate
    Rational variance;
    /// sqrt(variance) rounded up to a multiple of 1e-12
    Rational stderr_bound;
};

/// sqrt(v) rounded up to a multiple of 10^-12.
inline Rational sqrt_upper(const Rational& v)
{
    BigInt scale = 1;
    for (int i = 0; i < 12; ++i) scale *= 10;
    BigInt scaled = (numerator(v) * scale * scale + denominator(v) - 1) / denominator(v);
    BigInt root = isqrt(scaled);
    if (root * root < scaled) ++root;
    return Rational(root, scale);
}

/// Monte Carlo estimate of P(contains H) from `samples` uniform orientations.
/// Orientation bits come straight from std::mt19937_64, whose output sequence
/// is fixed by the standard, so a seed reproduces the estimate everywhere.
inline McEstimate mc_estimate(const Graph& g, const Digraph& h, std::uint64_t samples, std::uint64_t seed)
{
    if (samples == 0) throw GraphError("mc_estimate needs at least one sample");
    auto patterns = forbidden_patterns(g, h);
    std::mt19937_64 rng(seed);
    const auto m = static_cast<std::size_t>(g.size());
    std::vector<bool> bits(m);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (std::size_t base = 0; base < m; base += 64) {
            std::uint64_t word = rng();
            for (std::size_t i = base; i < std::min(m, base + 64); ++i) bits[i] = (word >> (i - base)) & 1U;
        }
        for (const auto& p : patterns) {
            if (extends(bits, p)) {
                ++hits;
                break;
            }
        }
    }
    McEstimate r;
    r.samples = samples;
    r.hits = hits;
    r.estimate = Rational(BigInt(hits), BigInt(samples));
    r.variance = r.estimate * (1 - r.estimate) / BigInt(samples);
    r.stderr_bound = sqrt_upper(r.variance);
    return r;
}

/// |estimate - exact| <= k standard errors, decided exactly on squares.
inline bool within_sigmas(const McEstimate& e, const Rational& exact, int k)
{
    Rational diff = e.estimate - exact;
    return diff * diff <= Rational(k * k) * e.variance;
}

}  // namespace dorient
