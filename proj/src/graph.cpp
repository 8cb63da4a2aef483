#include "isocover/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace isocover {

Graph::Graph(std::vector<VertexLabel> vertices, const std::vector<LabelEdge>& edges)
    : labels_(std::move(vertices)) {
    std::sort(labels_.begin(), labels_.end());
    if (auto dup = std::adjacent_find(labels_.begin(), labels_.end()); dup != labels_.end())
        throw InputError("duplicate vertex " + dup->str());
    adj_.assign(labels_.size(), {});
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw InputError("self-loop at " + u.str());
        Index i = index_of(u);
        Index j = index_of(v);
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        edge_count_ += nb.size();
    }
    edge_count_ /= 2;
}

std::optional<Index> Graph::find(const VertexLabel& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v)
        return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
}

Index Graph::index_of(const VertexLabel& v) const {
    if (auto i = find(v))
        return *i;
    throw InputError("unknown vertex " + v.str());
}

bool Graph::adjacent(Index i, Index j) const {
    return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

bool Graph::has_edge(const VertexLabel& u, const VertexLabel& v) const {
    auto i = find(u);
    auto j = find(v);
    return i && j && adjacent(*i, *j);
}

std::vector<std::pair<Index, Index>> Graph::edges() const {
    std::vector<std::pair<Index, Index>> out;
    out.reserve(edge_count_);
    for (Index i = 0; i < adj_.size(); ++i)
        for (Index j : adj_[i])
            if (i < j)
                out.emplace_back(i, j);
    return out;
}

std::vector<LabelEdge> Graph::label_edges() const {
    std::vector<LabelEdge> out;
    out.reserve(edge_count_);
    for (auto [i, j] : edges())
        out.emplace_back(labels_[i], labels_[j]);
    return out;
}

Graph graph_from_indices(std::size_t n, const std::vector<std::pair<Index, Index>>& edges) {
    std::vector<VertexLabel> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(VertexLabel::original(static_cast<std::int64_t>(i)));
    std::vector<LabelEdge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge endpoint out of range");
        es.emplace_back(vs[u], vs[v]);
    }
    return Graph(std::move(vs), es);
}

Graph with_additions(const Graph& g, const std::vector<VertexLabel>& new_vertices,
                     const std::vector<LabelEdge>& new_edges) {
    std::vector<VertexLabel> vs(g.vertices().begin(), g.vertices().end());
    for (const auto& v : new_vertices) {
        if (g.contains(v))
            throw InputError("vertex " + v.str() + " is not fresh");
        vs.push_back(v);
    }
    auto es = g.label_edges();
    es.insert(es.end(), new_edges.begin(), new_edges.end());
    return Graph(std::move(vs), es);
}

Graph without_edge(const Graph& g, const VertexLabel& u, const VertexLabel& v) {
    if (!g.has_edge(u, v))
        throw InputError("no edge " + u.str() + " " + v.str());
    auto es = g.label_edges();
    std::erase_if(es, [&](const LabelEdge& e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    });
    return Graph({g.vertices().begin(), g.vertices().end()}, es);
}

Graph without_vertex(const Graph& g, const VertexLabel& v) {
    g.index_of(v);
    std::vector<VertexLabel> vs;
    for (const auto& w : g.vertices())
        if (w != v)
            vs.push_back(w);
    auto es = g.label_edges();
    std::erase_if(es, [&](const LabelEdge& e) { return e.first == v || e.second == v; });
    return Graph(std::move(vs), es);
}

Graph induced_subgraph(const Graph& g, std::span<const VertexLabel> subset) {
    std::vector<char> keep(g.order(), 0);
    std::vector<VertexLabel> vs;
    for (const auto& v : subset) {
        Index i = g.index_of(v);
        if (!keep[i]) {
            keep[i] = 1;
            vs.push_back(v);
        }
    }
    std::vector<LabelEdge> es;
    for (auto [i, j] : g.edges())
        if (keep[i] && keep[j])
            es.emplace_back(g.label(i), g.label(j));
    return Graph(std::move(vs), es);
}

std::vector<std::int32_t> bfs_distances(const Graph& g, Index source) {
    std::vector<std::int32_t> dist(g.order(), kUnreachable);
    std::deque<Index> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Index x = queue.front();
        queue.pop_front();
        for (Index y : g.neighbors(x)) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::optional<std::size_t> distance(const Graph& g, const VertexLabel& u, const VertexLabel& v) {
    Index i = g.index_of(u);
    Index j = g.index_of(v);
    auto d = bfs_distances(g, i)[j];
    if (d == kUnreachable)
        return std::nullopt;
    return static_cast<std::size_t>(d);
}

std::size_t DistanceTable::max_finite() const {
    std::int32_t best = 0;
    for (auto d : d_)
        best = std::max(best, d);
    return static_cast<std::size_t>(best);
}

bool DistanceTable::all_reachable() const {
    return std::none_of(d_.begin(), d_.end(), [](auto d) { return d == kUnreachable; });
}

DistanceTable all_pairs_distances(const Graph& g) {
    DistanceTable table(g.order());
    for (Index i = 0; i < g.order(); ++i) {
        auto row = bfs_distances(g, i);
        for (Index j = 0; j < g.order(); ++j)
            table.raw(i, j) = row[j];
    }
    return table;
}

std::optional<std::size_t> eccentricity(const Graph& g, Index center) {
    std::size_t ecc = 0;
    for (auto d : bfs_distances(g, center)) {
        if (d == kUnreachable)
            return std::nullopt;
        ecc = std::max(ecc, static_cast<std::size_t>(d));
    }
    return ecc;
}

std::size_t radius(const Graph& g) {
    if (g.empty())
        throw DomainError("radius of the empty graph is undefined");
    std::size_t best = g.order();
    for (Index i = 0; i < g.order(); ++i) {
        auto ecc = eccentricity(g, i);
        if (!ecc)
            throw DomainError("radius of a disconnected graph is undefined");
        best = std::min(best, *ecc);
    }
    return best;
}

std::vector<std::vector<Index>> connected_components(const Graph& g) {
    std::vector<std::vector<Index>> comps;
    std::vector<char> seen(g.order(), 0);
    for (Index s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Index> comp{s};
        seen[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (Index y : g.neighbors(comp[k]))
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) {
    return !g.empty() && g.size() + 1 == g.order() && is_connected(g);
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Index i = 0; i < g.order(); ++i)
        best = std::max(best, g.degree(i));
    return best;
}

} // namespace isocover
