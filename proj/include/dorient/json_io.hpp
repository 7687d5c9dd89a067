#pragma once

// JSON renderings. Big integers and rationals are written as decimal
// strings ("123", "5/8") so no consumer truncates them to 64 bits.

#include "dorient/count.hpp"
#include "dorient/decomposition.hpp"
#include "dorient/exact.hpp"
#include "dorient/extremal.hpp"
#include "dorient/graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dorient {

using Json = nlohmann::ordered_json;

inline Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (auto e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"n", g.order()}, {"edges", edges}};
}

inline Json to_json(const Digraph& d)
{
    Json arcs = Json::array();
    for (auto a : d.arcs()) arcs.push_back({a.from, a.to});
    return Json{{"n", d.order()}, {"arcs", arcs}};
}

inline Graph graph_from_json(const Json& j)
{
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("edges")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return make_graph(j.at("n").get<int>(), pairs);
}

inline Json to_json(const CountResult& r)
{
    return Json{{"hfree", to_string(r.hfree)}, {"total", to_string(r.total)}, {"p_contains", to_fraction_string(r.p_contains)}};
}

inline CountResult count_result_from_json(const Json& j)
{
    CountResult r{BigInt(j.at("hfree").get<std::string>()), BigInt(j.at("total").get<std::string>()),
                  parse_fraction(j.at("p_contains").get<std::string>())};
    if (r.hfree < 0 || r.hfree > r.total || r.p_contains != Rational(r.total - r.hfree, r.total)) {
        throw ParseError("inconsistent count result");
    }
    return r;
}

inline Json to_json(const McEstimate& e)
{
    return Json{{"samples", e.samples},
                {"hits", e.hits},
                {"estimate", to_fraction_string(e.estimate)},
                {"variance", to_fraction_string(e.variance)},
                {"stderr", to_fraction_string(e.stderr_bound)},
                {"estimate_decimal", to_decimal_string(e.estimate)}};
}

inline Json to_json(const Embedding& e) { return Json(e.map); }

inline Json to_json(const FamilyResult& r)
{
    Json members = Json::array();
    for (std::size_t i = 0; i < r.members.size(); ++i) {
        Json m = to_json(r.members[i]);
        m["name"] = describe(r.members[i]);
        m["witness"] = to_json(r.witnesses[i]);
        members.push_back(m);
    }
    return Json{{"p", r.p}, {"t", r.t_used}, {"members", members}};
}

inline Json to_json(const DirectedFamilyResult& r)
{
    Json orientations = Json::array();
    for (const auto& o : r.member_orientations) orientations.push_back(to_json(o));
    Json j = to_json(r.base);
    j["name"] = describe(r.base);
    j["orientation_classes"] = r.orientation_classes;
    j["member_orientations"] = orientations;
    j["all_orientations_in"] = r.all_orientations_in;
    return j;
}

inline Json to_json(const ExtremalResult& r)
{
    Json family = Json::array(), witnesses = Json::array();
    for (const auto& f : r.family) family.push_back(to_json(f));
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return Json{{"n", r.n}, {"max_edges", r.max_edges}, {"family", family}, {"witnesses", witnesses}};
}

inline Json to_json(const MaxDResult& r)
{
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return Json{{"n", r.n},
                {"max_count", to_string(r.max_count)},
                {"classes", r.classes},
                {"counted", r.counted},
                {"witnesses", witnesses}};
}

inline Json to_json(const LowerBoundResult& r)
{
    return Json{{"exponent", r.exponent},
                {"witness", to_json(r.witness)},
                {"witness_count", to_string(r.witness_count)},
                {"holds", r.holds}};
}

/// Canonical text rendering used by the CLI (two-space indent, trailing newline).
inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dorient
