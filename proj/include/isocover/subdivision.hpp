#pragma once

#include <functional>
#include <map>
#include <vector>

#include "isocover/graph.hpp"

namespace isocover {

/// Source edge of X, stored with the smaller label first.
using SourceEdge = std::pair<VertexLabel, VertexLabel>;

inline SourceEdge make_source_edge(const VertexLabel& u, const VertexLabel& v) {
    return u < v ? SourceEdge{u, v} : SourceEdge{v, u};
}

/// For each edge uv of a source graph X, the internal vertices s1..sc of the
/// path u s1 ... sc v in the constructed graph, listed from the smaller endpoint.
struct SubdivisionMap {
    std::map<SourceEdge, std::vector<VertexLabel>> paths;

    friend bool operator==(const SubdivisionMap&, const SubdivisionMap&) = default;
};

struct Subdivided {
    Graph graph;
    SubdivisionMap map;
};

/// Replaces edge uv by a path with c fresh internal vertices Subdiv(u, v, 1..c).
/// Both endpoints must be Original labels; c >= 1.
Graph subdivide_edge(const Graph& g, const VertexLabel& u, const VertexLabel& v, int c);

/// c-subdivision of every edge.
Subdivided subdivide_all(const Graph& g, int c);

/// Subdivides each edge a per-edge number of times (each count >= 1).
Subdivided subdivide_each(const Graph& g, const std::function<int(const SourceEdge&)>& count);

} // namespace isocover
