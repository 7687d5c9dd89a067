#pragma once

#include "dorient/graph.hpp"

#include <cstdint>
#include <vector>

namespace dorient {

/// One direction bit per edge of the base graph. Bit i = 0 directs edge
/// (u,v), u<v, as u->v; bit 1 as v->u.
class Orientation {
public:
    Orientation(Graph base, std::vector<bool> bits) : base_(std::move(base)), bits_(std::move(bits))
    {
        if (static_cast<int>(bits_.size()) != base_.size()) {
            throw GraphError("orientation has " + std::to_string(bits_.size()) + " bits for " +
                             std::to_string(base_.size()) + " edges");
        }
    }

    static Orientation from_mask(Graph base, std::uint64_t mask)
    {
        std::vector<bool> bits(static_cast<std::size_t>(base.size()));
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (mask >> i) & 1U;
        return Orientation(std::move(base), std::move(bits));
    }

    /// Orientation of `base` that agrees with the arcs of d.
    static Orientation from_digraph(Graph base, const Digraph& d)
    {
        std::vector<bool> bits(static_cast<std::size_t>(base.size()));
        if (d.size() != base.size()) throw GraphError("digraph does not orient every base edge");
        for (std::size_t i = 0; i < bits.size(); ++i) {
            auto e = base.edges()[i];
            if (d.has_arc(e.u, e.v)) bits[i] = false;
            else if (d.has_arc(e.v, e.u)) bits[i] = true;
            else throw GraphError("digraph misses base edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        return Orientation(std::move(base), std::move(bits));
    }

    const Graph& base() const { return base_; }
    const std::vector<bool>& bits() const { return bits_; }

    /// Head of edge i.
    int head(int i) const
    {
        auto e = base_.edges()[static_cast<std::size_t>(i)];
        return bits_[static_cast<std::size_t>(i)] ? e.u : e.v;
    }

    Digraph digraph() const { return orient(base_, bits_); }

private:
    Graph base_;
    std::vector<bool> bits_;
};

/// (U,V) is t-almost pure when all but at most t of the U-V edges point into
/// U, or all but at most t point into V. t = 0 is the pure case.
inline bool is_pure_pair(const Orientation& o, VertexSet u_set, VertexSet v_set, int slack = 0)
{
    if (u_set & v_set) throw GraphError("is_pure_pair needs disjoint vertex sets");
    int into_u = 0, into_v = 0;
    const auto& edges = o.base().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto e = edges[i];
        bool cross = ((u_set & bit(e.u)) && (v_set & bit(e.v))) || ((u_set & bit(e.v)) && (v_set & bit(e.u)));
        if (!cross) continue;
        int head = o.head(static_cast<int>(i));
        if (u_set & bit(head)) ++into_u;
        else ++into_v;
    }
    return into_v <= slack || into_u <= slack;
}

}  // namespace dorient
