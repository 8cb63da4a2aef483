#pragma once

#include <map>
#include <optional>
#include <vector>

#include "isocover/graph.hpp"

namespace isocover {

/// The incidence (vertex, {vertex, other}).
struct Incidence {
    VertexLabel vertex;
    VertexLabel other;

    friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// All incidences of X, ordered by vertex then by the other endpoint. Size 2|E(X)|.
std::vector<Incidence> incidences(const Graph& x);

/// A map from incidences to colours 1..kappa.
class IncidenceColoring {
public:
    explicit IncidenceColoring(int kappa);

    int kappa() const { return kappa_; }
    /// Colours incidence (vertex, {vertex, other}); colour must lie in 1..kappa.
    void set(const Incidence& inc, int color);
    std::optional<int> color(const Incidence& inc) const;
    /// Like color(), but a missing incidence is an InputError.
    int at(const Incidence& inc) const;
    const std::map<Incidence, int>& entries() const { return colors_; }

    friend bool operator==(const IncidenceColoring&, const IncidenceColoring&) = default;

private:
    int kappa_;
    std::map<Incidence, int> colors_;
};

/// True iff the two incidences of every edge differ and the incidences of distinct
/// edges at a common vertex differ. InputError if the colouring is not exactly
/// defined on Inc(X).
bool is_proper(const Graph& x, const IncidenceColoring& phi);

/// Lowest legal colour per incidence, scanning vertices in label order and then
/// neighbours in label order. kappa is max_degree + 1, the palette the greedy
/// argument guarantees; some colours may stay unused.
IncidenceColoring greedy_coloring(const Graph& x);

/// Proper colouring of wall(n) with kappa = 3, from a row-parity pattern:
/// right-hand incidences get 1, downward vertical 3, upward vertical 2, and the
/// left-hand incidence takes whichever of 2/3 the vertical at that vertex leaves.
IncidenceColoring wall_3_coloring(int n);

} // namespace isocover
