#pragma once

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "hst/green.hpp"

namespace hst {

using Json = nlohmann::json;

inline Json to_json(const VertexTuple& t) { return Json(t.entries()); }

inline Json to_json(const std::vector<VertexTuple>& tuples) {
    Json arr = Json::array();
    for (const VertexTuple& t : tuples) arr.push_back(to_json(t));
    return arr;
}

inline Json to_json(const Triangulation& t) {
    return Json{{"m", t.spec().m}, {"delta", t.spec().delta},
                {"simplices", to_json(t.simplices())}};
}

inline Json to_json(const FacetPartition& f) {
    return Json{{"lower", to_json(f.lower)}, {"upper", to_json(f.upper)}};
}

/// Poset dump: canonical elements plus the HST1 covers and the full HST2
/// relation (as ordered pairs of canonical indices, reflexive pairs omitted).
inline Json to_json(const TriangulationPoset& poset) {
    Json elements = Json::array();
    for (int i = 0; i < poset.size(); ++i)
        elements.push_back(to_json(poset.element(i).simplices()));
    Json covers = Json::array();
    for (const TriangulationPoset::CoverEdge& c : poset.covers())
        covers.push_back(Json::array({c.from, c.to}));
    Json leq2 = Json::array();
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j)
            if (i != j && poset.leq2(i, j)) leq2.push_back(Json::array({i, j}));
    return Json{{"spec", Json{{"m", poset.spec().m}, {"delta", poset.spec().delta}}},
                {"elements", elements},
                {"hst1_covers", covers},
                {"hst2_leq", leq2}};
}

inline Json to_json(const GreenSequence& g) {
    Json states = Json::array();
    for (const TiltingState& s : g.states) states.push_back(to_json(s.tuples()));
    return Json{{"d", g.d}, {"n", g.n}, {"flips", to_json(g.flips)}, {"states", states}};
}

inline Json to_json(const GreenClass& c, const Triangulation& odd) {
    return Json{{"sigma", to_json(c.sigma)},
                {"size", c.representatives.size()},
                {"odd_triangulation", to_json(odd.simplices())}};
}

/// Green dump for one (d, n): every sequence in canonical (flip-lex) order,
/// then the equivalence classes in odd-triangulation order.
inline Json green_export_json(int d, int n, std::size_t state_guard = default_state_guard,
                              std::size_t chain_guard = default_chain_guard) {
    std::vector<GreenSequence> all = enumerate_green_sequences(d, n, state_guard, chain_guard);
    Json sequences = Json::array();
    for (const GreenSequence& g : all) sequences.push_back(to_json(g));
    const GreenClassOrders orders(d, n, std::move(all));
    Json classes = Json::array();
    for (int i = 0; i < orders.size(); ++i)
        classes.push_back(to_json(orders.classes()[static_cast<std::size_t>(i)],
                                  orders.class_triangulations()[static_cast<std::size_t>(i)]));
    return Json{{"d", d}, {"n", n}, {"sequences", sequences}, {"classes", classes}};
}

namespace detail {

inline void dot_graph(std::ostringstream& os, const std::string& name, int node_count,
                      std::vector<std::pair<int, int>> edges) {
    std::sort(edges.begin(), edges.end());
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (int i = 0; i < node_count; ++i)
        os << "  t" << i << " [label=\"T" << i << "\"];\n";
    for (const auto& [a, b] : edges) os << "  t" << a << " -> t" << b << ";\n";
    os << "}\n";
}

} // namespace detail

/// Hasse diagrams of the two orders, one DOT digraph per order. Byte-stable:
/// nodes ascend, edges are sorted pairs.
inline std::string poset_to_dot(const TriangulationPoset& poset) {
    std::ostringstream os;
    std::vector<std::pair<int, int>> covers1;
    for (const TriangulationPoset::CoverEdge& c : poset.covers())
        covers1.emplace_back(c.from, c.to);
    detail::dot_graph(os, "hst1", poset.size(), std::move(covers1));
    detail::dot_graph(os, "hst2", poset.size(), hasse(poset.leq2_matrix()));
    return os.str();
}

/// Hasse diagrams of the two orders on green-sequence classes.
inline std::string green_to_dot(const GreenClassOrders& orders) {
    std::ostringstream os;
    detail::dot_graph(os, "green1", orders.size(), hasse(orders.leq1_matrix()));
    detail::dot_graph(os, "green2", orders.size(), hasse(orders.leq2_matrix()));
    return os.str();
}

/// Canonical file rendering of a JSON export.
inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

} // namespace hst
