#include "isocover/subdivision.hpp"

#include <string>

namespace isocover {

namespace {

void require_original(const VertexLabel& u, const VertexLabel& v) {
    if (!u.is_original() || !v.is_original())
        throw InputError("only edges between original vertices can be subdivided (" + u.str() +
                         " " + v.str() + ")");
}

std::vector<VertexLabel> internal_path(const SourceEdge& e, int c) {
    std::vector<VertexLabel> path;
    path.reserve(static_cast<std::size_t>(c));
    for (int k = 1; k <= c; ++k)
        path.push_back(VertexLabel::subdiv(e.first.id(), e.second.id(), k));
    return path;
}

} // namespace

Graph subdivide_edge(const Graph& g, const VertexLabel& u, const VertexLabel& v, int c) {
    if (c < 1)
        throw InputError("subdivision count must be at least 1, got " + std::to_string(c));
    if (!g.has_edge(u, v))
        throw InputError("no edge " + u.str() + " " + v.str() + " to subdivide");
    require_original(u, v);
    auto e = make_source_edge(u, v);
    auto path = internal_path(e, c);

    std::vector<LabelEdge> edges;
    for (const auto& edge : g.label_edges())
        if (make_source_edge(edge.first, edge.second) != e)
            edges.push_back(edge);
    edges.emplace_back(e.first, path.front());
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        edges.emplace_back(path[k], path[k + 1]);
    edges.emplace_back(path.back(), e.second);

    std::vector<VertexLabel> vs(g.vertices().begin(), g.vertices().end());
    for (const auto& s : path) {
        if (g.contains(s))
            throw InputError("subdivision label " + s.str() + " already in use");
        vs.push_back(s);
    }
    return Graph(std::move(vs), edges);
}

Subdivided subdivide_each(const Graph& g, const std::function<int(const SourceEdge&)>& count) {
    std::vector<VertexLabel> vs(g.vertices().begin(), g.vertices().end());
    std::vector<LabelEdge> edges;
    SubdivisionMap map;
    for (const auto& [u, v] : g.label_edges()) {
        require_original(u, v);
        auto e = make_source_edge(u, v);
        int c = count(e);
        if (c < 1)
            throw InputError("subdivision count must be at least 1, got " + std::to_string(c));
        auto path = internal_path(e, c);
        edges.emplace_back(e.first, path.front());
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            edges.emplace_back(path[k], path[k + 1]);
        edges.emplace_back(path.back(), e.second);
        vs.insert(vs.end(), path.begin(), path.end());
        map.paths.emplace(e, std::move(path));
    }
    return {Graph(std::move(vs), edges), std::move(map)};
}

Subdivided subdivide_all(const Graph& g, int c) {
    if (c < 1)
        throw InputError("subdivision count must be at least 1, got " + std::to_string(c));
    return subdivide_each(g, [c](const SourceEdge&) { return c; });
}

} // namespace isocover
