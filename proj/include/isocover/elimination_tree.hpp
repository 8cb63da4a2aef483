#pragma once

#include <map>
#include <optional>

#include "isocover/vertex_label.hpp"

namespace isocover {

/// Rooted forest given by parent pointers; roots map to nullopt.
/// A valid elimination tree of depth d certifies treedepth <= d.
struct EliminationTree {
    std::map<VertexLabel, std::optional<VertexLabel>> parent;

    /// Largest number of vertices on a root-to-leaf path (0 when empty).
    /// Assumes the parent pointers are acyclic; verify_elimination_tree checks that.
    std::size_t depth() const;

    friend bool operator==(const EliminationTree&, const EliminationTree&) = default;
};

} // namespace isocover
