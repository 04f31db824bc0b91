#ifndef ASKEYVS_SCHEME_GRAPH_HPP
#define ASKEYVS_SCHEME_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bitset>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "error.hpp"

namespace askeyvs {

/// Boxes of the q = 1 scheme.
enum class NodeId { WR, cdH_dH, cH_H, MP_M_K, J, Ch, L, B, bin };

/// The four essential parameters whose vanishing labels a box.
enum class UniformParam { a2 = 0, b1 = 1, b2 = 2, d2 = 3 };

using VanishingPattern = std::bitset<4>;

inline constexpr std::array<std::string_view, 4> kUniformParamNames{"a2", "b1", "b2", "d2"};

struct SchemeNode {
    NodeId id;
    std::string label;               // e.g. "W/R"
    std::vector<std::string> names;  // family acronyms in the box
    DegreeTriple degrees;
    VanishingPattern vanishing;

    std::vector<std::string> vanishing_names() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < kUniformParamNames.size(); ++i)
            if (vanishing.test(i))
                out.emplace_back(kUniformParamNames[i]);
        return out;
    }
};

struct SchemeEdge {
    NodeId src;
    NodeId dst;
};

struct SchemeGraph {
    std::vector<SchemeNode> nodes;
    std::vector<SchemeEdge> edges;
    std::vector<std::pair<NodeId, NodeId>> duals;

    const SchemeNode& node(NodeId id) const
    {
        for (const auto& n : nodes)
            if (n.id == id)
                return n;
        throw Error(Errc::NoMatch, "node not in scheme");
    }

    bool has_edge(NodeId src, NodeId dst) const
    {
        return std::any_of(edges.begin(), edges.end(), [&](const SchemeEdge& e) { return e.src == src && e.dst == dst; });
    }
};

namespace detail {

inline VanishingPattern pattern(std::initializer_list<UniformParam> params)
{
    VanishingPattern p;
    for (auto v : params)
        p.set(static_cast<std::size_t>(v));
    return p;
}

} // namespace detail

/// The q = 1 scheme: nine boxes, twelve arrows, four dual links.
///
/// The binomial box lists the vanishing of all four essential parameters
/// (each arrow into it zeroes exactly one of them).
inline const SchemeGraph& scheme_graph()
{
    static const SchemeGraph graph = [] {
        using P = UniformParam;
        using detail::pattern;
        SchemeGraph g;
        g.nodes = {
            {NodeId::WR, "W/R", {"W", "R"}, {2, 4, 2}, pattern({})},
            {NodeId::cdH_dH, "cdH/dH", {"cdH", "dH"}, {2, 3, 1}, pattern({P::a2})},
            {NodeId::cH_H, "cH/H", {"cH", "H"}, {1, 3, 2}, pattern({P::b2})},
            {NodeId::MP_M_K, "M-P/M/K", {"M-P", "M", "K"}, {1, 2, 1}, pattern({P::a2, P::b2})},
            {NodeId::J, "J", {"J"}, {0, 2, 2}, pattern({P::b1, P::b2})},
            {NodeId::Ch, "Ch", {"Ch"}, {1, 1, 1}, pattern({P::a2, P::b2, P::d2})},
            {NodeId::L, "L", {"L"}, {0, 2, 1}, pattern({P::a2, P::b1, P::b2})},
            {NodeId::B, "B", {"B"}, {0, 1, 2}, pattern({P::b1, P::b2, P::d2})},
            {NodeId::bin, "bin", {"bin"}, {0, 1, 1}, pattern({P::a2, P::b1, P::b2, P::d2})},
        };
        g.edges = {
            {NodeId::WR, NodeId::cdH_dH}, {NodeId::WR, NodeId::cH_H},   {NodeId::cdH_dH, NodeId::MP_M_K},
            {NodeId::cH_H, NodeId::MP_M_K}, {NodeId::cH_H, NodeId::J},  {NodeId::MP_M_K, NodeId::Ch},
            {NodeId::MP_M_K, NodeId::L},  {NodeId::J, NodeId::L},       {NodeId::J, NodeId::B},
            {NodeId::Ch, NodeId::bin},    {NodeId::L, NodeId::bin},     {NodeId::B, NodeId::bin},
        };
        g.duals = {{NodeId::WR, NodeId::WR},
                   {NodeId::MP_M_K, NodeId::MP_M_K},
                   {NodeId::Ch, NodeId::Ch},
                   {NodeId::cdH_dH, NodeId::cH_H}};
        return g;
    }();
    return graph;
}

inline std::string_view node_label(NodeId id) { return scheme_graph().node(id).label; }

/// True iff the arrow src -> dst lowers one degree by 1, or (when
/// deg x + deg h >= 3) lowers deg g together with one of deg x, deg h.
inline bool arrow_follows_degree_rule(const DegreeTriple& src, const DegreeTriple& dst)
{
    const int ddx = src.dx - dst.dx, ddg = src.dg - dst.dg, ddh = src.dh - dst.dh;
    const bool single = (ddx == 1 && ddg == 0 && ddh == 0) || (ddx == 0 && ddg == 1 && ddh == 0) ||
                        (ddx == 0 && ddg == 0 && ddh == 1);
    const bool coupled = src.dx + src.dh >= 3 && ddg == 1 && ((ddx == 1 && ddh == 0) || (ddx == 0 && ddh == 1));
    return single || coupled;
}

/// Reversing the degree triple corresponds to x <-> h duality.
inline DegreeTriple reversed(const DegreeTriple& t) { return {t.dh, t.dg, t.dx}; }

/// Vanishing pattern of the normalized spec.
inline VanishingPattern vanishing_pattern(const UniformParams& p)
{
    VanishingPattern v;
    v.set(0, p.a2.is_zero());
    v.set(1, p.b1.is_zero());
    v.set(2, p.b2.is_zero());
    v.set(3, p.d2.is_zero());
    return v;
}

/// Places a spec on its box: normalizes it and picks the box with the
/// largest vanishing pattern contained in the spec's own pattern. A box
/// pattern that is contained but not maximal only happens at special points
/// of a larger family (e.g. Wilson with b1 = 0), which stay in that family's
/// box. Throws NoMatch if d2 = 0 without a2 = b2 = 0 or b1 = b2 = 0, or if
/// the box disagrees with the spec's degree triple.
inline NodeId classify_spec(const SeqSpecQ1& s)
{
    s.validate();
    if (!check_q1_constraints(s))
        throw Error(Errc::NoMatch, "spec violates the recurrence constraints on d3, d4");
    const UniformParams p = normalize_uniform(s);
    const VanishingPattern z = vanishing_pattern(p);
    if (p.d2.is_zero() && !((p.a2.is_zero() && p.b2.is_zero()) || (p.b1.is_zero() && p.b2.is_zero())))
        throw Error(Errc::NoMatch, "d2 = 0 requires a2 = b2 = 0 or b1 = b2 = 0");
    const SchemeNode* best = nullptr;
    for (const auto& node : scheme_graph().nodes) {
        if ((node.vanishing & ~z).any())
            continue;
        if (best == nullptr || node.vanishing.count() > best->vanishing.count())
            best = &node;
    }
    if (best == nullptr)
        throw Error(Errc::NoMatch, "no box matches the vanishing pattern");
    const DegreeTriple t = degree_triple(s);
    if (!(t == best->degrees))
        throw Error(Errc::NoMatch, "box " + best->label + " has degrees " + best->degrees.to_string() +
                                       " but the spec has " + t.to_string());
    return best->id;
}

inline std::string to_dot(const SchemeGraph& g)
{
    std::ostringstream os;
    os << "digraph verde_star {\n";
    os << "  node [shape=box];\n";
    for (const auto& n : g.nodes) {
        os << "  \"" << n.label << "\" [label=\"" << n.label << "\\n" << n.degrees.dx << "," << n.degrees.dg << ","
           << n.degrees.dh;
        auto v = n.vanishing_names();
        if (!v.empty()) {
            os << "\\n";
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? "=" : "") << v[i];
            os << "=0";
        }
        os << "\"];\n";
    }
    for (const auto& e : g.edges)
        os << "  \"" << node_label(e.src) << "\" -> \"" << node_label(e.dst) << "\";\n";
    for (const auto& [a, b] : g.duals)
        os << "  \"" << node_label(a) << "\" -> \"" << node_label(b)
           << "\" [dir=none, style=dashed, constraint=false, label=\"dual\"];\n";
    os << "}\n";
    return os.str();
}

inline nlohmann::json to_json(const SchemeGraph& g)
{
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : g.nodes)
        j["nodes"].push_back({{"id", n.label},
                              {"names", n.names},
                              {"degree_triple", {n.degrees.dx, n.degrees.dg, n.degrees.dh}},
                              {"vanishing", n.vanishing_names()}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"src", node_label(e.src)}, {"dst", node_label(e.dst)}});
    j["duals"] = nlohmann::json::array();
    for (const auto& [a, b] : g.duals)
        j["duals"].push_back({node_label(a), node_label(b)});
    return j;
}

} // namespace askeyvs

#endif
