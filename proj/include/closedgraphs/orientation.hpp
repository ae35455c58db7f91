#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closedgraphs/graph.hpp"
#include "closedgraphs/groebner.hpp"

namespace closedgraphs {

/// Directed graph with one arc per edge of an underlying graph. `rank`
/// breaks ties between sources during topological sorting.
struct OrientedGraph {
    std::vector<std::string> names;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<int> rank;

    /// Hand-built orientation; ranks follow vertex order.
    static OrientedGraph from_arcs(std::vector<std::string> names, std::vector<std::pair<Vertex, Vertex>> arcs);
};

/// Arc (u, v) for edge {u, v} exactly when x_u y_v leads x_u y_v - x_v y_u
/// under `o`, indices taken from `lab`. Ranks are the labels.
OrientedGraph orient(const Graph& g, const Labelling& lab, const TermOrder& o);

struct TopologicalResult {
    std::optional<Labelling> labelling;
    std::vector<Vertex> cycle;  // a directed cycle when no labelling exists
};

/// Kahn's algorithm, always taking the available source of smallest rank.
TopologicalResult topological_labelling(const OrientedGraph& og);

/// Depth-first cycle search, independent of topological_labelling.
std::optional<std::vector<Vertex>> find_directed_cycle(const OrientedGraph& og);

}  // namespace closedgraphs
