/**
 * @file dot.hpp
 * @brief Graphviz and JSON output for the weight-poset Hasse diagram.
 */
#pragma once

#include "ogmirror/diagram.hpp"

#include <json.hpp>

#include <string>

namespace ogmirror {

// Node ids are the diagram strings; edges carry the added label.
inline std::string hasse_dot(Rank rank) {
    std::string s = "digraph hasse_n" + std::to_string(rank.value()) + " {\n";
    s += "  rankdir=BT;\n";
    for (const auto& d : enumerate_diagrams(rank)) {
        s += "  \"" + d.to_string() + "\";\n";
    }
    for (const auto& e : hasse_edges(rank)) {
        s += "  \"" + e.from.to_string() + "\" -> \"" + e.to.to_string() + "\" [label=\"" +
             std::to_string(e.label) + "\"];\n";
    }
    s += "}\n";
    return s;
}

inline nlohmann::ordered_json hasse_json(Rank rank) {
    nlohmann::ordered_json doc;
    doc["n"] = rank.value();
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& d : enumerate_diagrams(rank)) nodes.push_back(d.to_string());
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : hasse_edges(rank)) {
        edges.push_back({{"from", e.from.to_string()}, {"to", e.to.to_string()}, {"label", e.label}});
    }
    doc["nodes"] = std::move(nodes);
    doc["edges"] = std::move(edges);
    return doc;
}

}  // namespace ogmirror
