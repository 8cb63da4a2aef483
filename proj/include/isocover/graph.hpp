#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "isocover/errors.hpp"
#include "isocover/vertex_label.hpp"

namespace isocover {

using Index = std::uint32_t;
using LabelEdge = std::pair<VertexLabel, VertexLabel>;

/// Immutable simple undirected graph over structured labels.
///
/// Vertices are stored in canonical label order, so vertex i is the i-th
/// smallest label. Adjacency lists are sorted. Duplicate edges given to the
/// constructor collapse into one; self-loops and dangling endpoints are
/// rejected with InputError.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexLabel> vertices, const std::vector<LabelEdge>& edges);

    std::size_t order() const { return labels_.size(); }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return labels_.empty(); }

    std::span<const VertexLabel> vertices() const { return labels_; }
    const VertexLabel& label(Index i) const { return labels_[i]; }
    std::optional<Index> find(const VertexLabel& v) const;
    /// Like find(), but an unknown label is an InputError.
    Index index_of(const VertexLabel& v) const;
    bool contains(const VertexLabel& v) const { return find(v).has_value(); }

    std::span<const Index> neighbors(Index i) const { return adj_[i]; }
    std::size_t degree(Index i) const { return adj_[i].size(); }
    bool adjacent(Index i, Index j) const;
    bool has_edge(const VertexLabel& u, const VertexLabel& v) const;

    /// All edges as index pairs (i < j) in lexicographic order.
    std::vector<std::pair<Index, Index>> edges() const;
    std::vector<LabelEdge> label_edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    std::vector<VertexLabel> labels_;
    std::vector<std::vector<Index>> adj_;
    std::size_t edge_count_ = 0;
};

/// Graph on the labels 0..n-1 (as Original ids) with index edges.
Graph graph_from_indices(std::size_t n, const std::vector<std::pair<Index, Index>>& edges);

/// G plus new vertices and edges. New labels must be fresh.
Graph with_additions(const Graph& g, const std::vector<VertexLabel>& new_vertices,
                     const std::vector<LabelEdge>& new_edges);
Graph without_edge(const Graph& g, const VertexLabel& u, const VertexLabel& v);
Graph without_vertex(const Graph& g, const VertexLabel& v);

Graph induced_subgraph(const Graph& g, std::span<const VertexLabel> subset);

// ---- distances ----

inline constexpr std::int32_t kUnreachable = -1;

/// Single-source BFS; entries are kUnreachable for other components.
std::vector<std::int32_t> bfs_distances(const Graph& g, Index source);

/// Edge count of a shortest u-v path, or nullopt when no path exists.
std::optional<std::size_t> distance(const Graph& g, const VertexLabel& u, const VertexLabel& v);

class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

    std::size_t order() const { return n_; }
    std::optional<std::size_t> at(Index i, Index j) const {
        auto d = d_[std::size_t{i} * n_ + j];
        if (d == kUnreachable)
            return std::nullopt;
        return static_cast<std::size_t>(d);
    }
    /// Largest finite entry (0 for an empty table).
    std::size_t max_finite() const;
    bool all_reachable() const;

    std::int32_t& raw(Index i, Index j) { return d_[std::size_t{i} * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<std::int32_t> d_;
};

DistanceTable all_pairs_distances(const Graph& g);

/// Max distance from `center` to any vertex; nullopt if some vertex is unreachable.
std::optional<std::size_t> eccentricity(const Graph& g, Index center);

/// Minimum eccentricity. DomainError for empty or disconnected graphs.
std::size_t radius(const Graph& g);

// ---- structure ----

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::size_t max_degree(const Graph& g);
/// Components as sorted index lists, ordered by smallest member.
std::vector<std::vector<Index>> connected_components(const Graph& g);

} // namespace isocover
