#pragma once

#include <optional>
#include <vector>

#include "isocover/elimination_tree.hpp"
#include "isocover/graph.hpp"
#include "isocover/verifiers.hpp"

namespace isocover {

/// Bags indexed by bag id; `tree` is a tree on Original(0..bags-1).
struct TreeDecomposition {
    Graph tree;
    std::vector<std::vector<VertexLabel>> bags;

    /// Largest bag size minus one, clamped at 0.
    std::size_t width() const;
};

struct PathDecomposition {
    std::vector<std::vector<VertexLabel>> bags;

    std::size_t width() const;
    TreeDecomposition as_tree() const;
};

struct TreewidthResult {
    std::size_t width;
    TreeDecomposition decomposition;
};

struct PathwidthResult {
    std::size_t width;
    PathDecomposition decomposition;
};

struct TreedepthResult {
    std::size_t depth;
    EliminationTree tree;
};

/// The DP tables hold 2^n entries, so n is never allowed past this.
inline constexpr std::size_t kOracleHardCap = 26;
inline constexpr std::size_t kOracleDefaultBound = 18;

/// ISOCOVER_ORACLE_BOUND if set (clamped to the hard cap), else the default.
/// A malformed value is an InputError.
std::size_t oracle_bound();

/// Exact treewidth by subset DP over elimination orderings.
/// SizeError when |V| exceeds `bound` (default oracle_bound()).
TreewidthResult exact_treewidth(const Graph& g, std::optional<std::size_t> bound = std::nullopt);

/// Exact pathwidth as vertex separation number over subsets.
PathwidthResult exact_pathwidth(const Graph& g, std::optional<std::size_t> bound = std::nullopt);

/// Exact treedepth: 0 for the empty graph, max over components, 1 + min over deletions.
TreedepthResult exact_treedepth(const Graph& g, std::optional<std::size_t> bound = std::nullopt);

/// Both axioms plus connected traces; `tree` must be a tree over the bag ids.
Report verify_tree_decomposition(const Graph& g, const TreeDecomposition& d);
Report verify_path_decomposition(const Graph& g, const PathDecomposition& d);

} // namespace isocover
