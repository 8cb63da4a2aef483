#pragma once

#include "isocover/graph.hpp"

namespace isocover {

// All generators are deterministic and label vertices Original(0..n-1).
// Non-positive parameters raise InputError.

/// Path on n vertices, 0 - 1 - ... - (n-1).
Graph path(int n);
/// Cycle on n >= 3 vertices.
Graph cycle(int n);
/// Star with centre 0 and leaves 1..delta.
Graph star(int delta);
/// The star on delta+1 vertices with every edge subdivided once (2*delta+1 vertices).
Graph subdivided_star(int delta);
/// n x m grid; vertex (a, b) with 1-based coordinates has id grid_id(a, b, m).
Graph grid(int n, int m);
/// Wall of order n: the n x (2n+1) grid minus vertical edges (a,b)(a+1,b) with a, b of
/// different parity. Vertex (a, b) has id grid_id(a, b, 2n+1).
Graph wall(int n);
Graph complete(int k);
Graph petersen();

constexpr std::int64_t grid_id(int a, int b, int columns) {
    return static_cast<std::int64_t>(a - 1) * columns + (b - 1);
}

/// Row/column of a wall or grid vertex id (1-based).
struct GridCoord {
    int row;
    int col;
};
constexpr GridCoord grid_coord(std::int64_t id, int columns) {
    return {static_cast<int>(id / columns) + 1, static_cast<int>(id % columns) + 1};
}

} // namespace isocover
