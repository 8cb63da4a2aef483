#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "isocover/graph.hpp"

namespace isocover {

/// graph6 encoding of the graph's adjacency in index (canonical label) order.
std::string to_graph6(const Graph& g, bool header = false);

/// Vertex count and index edges of a graph6 string. Accepts an optional
/// ">>graph6<<" header and trailing whitespace; anything else malformed is an InputError.
struct Graph6Data {
    std::size_t order = 0;
    std::vector<std::pair<Index, Index>> edges;
};
Graph6Data parse_graph6(std::string_view text);

/// Decodes to a graph labelled Original(0..n-1).
Graph from_graph6(std::string_view text);

/// Same adjacency, vertex i renamed to labels[i]. Labels must be strictly increasing
/// so the index order survives the round trip.
Graph from_graph6(std::string_view text, const std::vector<VertexLabel>& labels);

/// Graphviz text. `attributes` may return extra attribute text for a vertex,
/// e.g. `shape=square, fillcolor="#1f77b4"`; empty means none.
std::string to_dot(const Graph& g,
                   const std::function<std::string(const VertexLabel&)>& attributes = {});

} // namespace isocover
