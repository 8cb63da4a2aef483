#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isocover/cover.hpp"
#include "isocover/elimination_tree.hpp"
#include "isocover/graph.hpp"
#include "isocover/subdivision.hpp"

namespace isocover {

/// Outcome of one check. A failure carries a small concrete witness such as
/// the offending vertex pair.
struct Report {
    std::string check;
    bool pass = false;
    std::string witness;

    explicit operator bool() const { return pass; }

    static Report ok(std::string check) { return {std::move(check), true, {}}; }
    static Report fail(std::string check, std::string witness) {
        return {std::move(check), false, std::move(witness)};
    }
};

/// Branch sets per pattern vertex plus one witnessing G-edge per pattern edge
/// (keyed with the smaller pattern label first).
struct MinorModel {
    std::map<VertexLabel, std::vector<VertexLabel>> branch_sets;
    std::map<std::pair<VertexLabel, VertexLabel>, LabelEdge> edge_witnesses;
};

struct ApexFamily {
    enum class Kind { Path, SubdividedStar };
    Kind kind = Kind::Path;
    int size = 0; // vertex count k of P_k, or delta of S_delta^*

    static ApexFamily path(int k) { return {Kind::Path, k}; }
    static ApexFamily star(int delta) { return {Kind::SubdividedStar, delta}; }
    std::string str() const;
};

/// Distances inside G[S] equal distances in G for every pair of S.
/// One BFS per vertex of S in G and in G[S]. A disconnected G[S] fails.
Report verify_isometric(const Graph& g, std::span<const VertexLabel> subset);

/// Every edge of G has both ends in some part.
Report verify_edge_cover(const Graph& g, const std::vector<std::vector<VertexLabel>>& parts);

/// G contains the subdivision of X described by `map` as an induced subgraph:
/// mapped paths exist, their internal vertices are pairwise disjoint and disjoint
/// from X's vertices, and the mapped vertex set induces no other edge.
/// A missing entry for an edge of X is an InputError.
Report verify_induced_subdivision(const Graph& g, const Graph& x, const SubdivisionMap& map);

/// G[S] is a tree in which `center` has eccentricity at most r.
Report verify_tree_radius(const Graph& g, std::span<const VertexLabel> subset, std::size_t r,
                          const VertexLabel& center);

/// Every component of G[S] - apex embeds in the family graph (P_k or S_delta^*).
Report verify_apex(const Graph& g, std::span<const VertexLabel> subset, const VertexLabel& apex,
                   ApexFamily family);

/// T spans exactly S and every edge of G[S] joins an ancestor-descendant pair.
Report verify_elimination_tree(const Graph& g, std::span<const VertexLabel> subset,
                               const EliminationTree& tree);

struct TreedepthCertificate {
    Report report;
    std::optional<EliminationTree> tree;
};

/// Depth bound implied by a role: 3 for tree-radius-2 and Apex(P3), 4 for Apex(P5) and Apex(S^*).
std::size_t role_treedepth_bound(const Role& role);

/// Builds an elimination tree for a part from its claimed structure (centre or
/// apex at the root, then component centres or path middles) and checks it
/// against the role's depth bound. A false structural claim fails with a witness.
TreedepthCertificate certify_treedepth_ub(const Graph& g, std::span<const VertexLabel> subset,
                                          const Role& role, const VertexLabel& root);

/// Branch sets must be nonempty, disjoint and connected; every pattern edge needs a real G-edge.
Report verify_minor_model(const Graph& g, const Graph& pattern, const MinorModel& model);

struct MinorCertificate {
    Report report;
    std::optional<MinorModel> model;
};

/// Given a subdivision of wall(n) in G, contracts subdivision paths and pairs of
/// wall columns into a grid(n, n) minor model, certifying tw(G) >= n for n >= 2
/// (grid(1,1) is a single vertex; tw >= 1 then only needs an edge of G).
/// Rejected when `map` does not verify as an induced subdivision of wall(n).
MinorCertificate certify_tw_lower_bound(const Graph& g, const SubdivisionMap& map, int n);

/// Quotient graph on pattern labels: p ~ q when some G-edge joins their branch sets.
Graph contract_model(const Graph& g, const MinorModel& model);

/// If `source` is exactly wall(n) for some n, returns n.
std::optional<int> wall_order(const Graph& source);

/// Every check a certificate admits, in order. Per-part reports are prefixed
/// "part[i]." and the grid-minor bound is added only when the source is a wall.
std::vector<Report> verify_certificate(const CoverCertificate& cert);

inline bool all_pass(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (!r.pass)
            return false;
    return true;
}

} // namespace isocover
