#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isocover/graph.hpp"
#include "isocover/incidence_coloring.hpp"
#include "isocover/subdivision.hpp"

namespace isocover {

/// What a covering part claims to be.
struct Role {
    enum class Kind { TreeRadius2, ApexP3, ApexP5, ApexStar };

    Kind kind = Kind::TreeRadius2;
    int delta = 0; // only for ApexStar: the S_delta^* family

    static Role tree_radius_2() { return {Kind::TreeRadius2, 0}; }
    static Role apex_p3() { return {Kind::ApexP3, 0}; }
    static Role apex_p5() { return {Kind::ApexP5, 0}; }
    static Role apex_star(int delta) { return {Kind::ApexStar, delta}; }

    /// "tree-radius-2", "apex-P3", "apex-P5", "apex-star(3)".
    std::string str() const;
    static Role parse(const std::string& text);

    friend bool operator==(const Role&, const Role&) = default;
};

struct Part {
    std::vector<VertexLabel> vertices; // sorted, unique
    Role role;
    std::optional<VertexLabel> apex;   // centre of a tree part, apex of an apex part
    std::optional<int> radius;         // claimed eccentricity of `apex` inside the part

    friend bool operator==(const Part&, const Part&) = default;
};

/// A constructed graph with its source graph, the subdivision of the source it
/// contains, and the covering parts. Certificates are checked by
/// verify_certificate(), never trusted.
struct CoverCertificate {
    Graph graph;
    Graph source;
    SubdivisionMap subdivision;
    std::vector<Part> parts;

    friend bool operator==(const CoverCertificate&, const CoverCertificate&) = default;
};

struct ApexSpec {
    std::vector<VertexLabel> v1;
    std::vector<VertexLabel> v2;
};

struct BuiltFrom {
    Graph graph;
    std::vector<VertexLabel> part1; // V1 + a1, sorted
    std::vector<VertexLabel> part2; // V2 + a2, sorted
};

/// Adds apex a1 = Apex(1) joined to V1 and a2 = Apex(2) joined to V2.
/// Both parts then have radius 1 and are isometric in the result.
BuiltFrom build_from(const Graph& base, const ApexSpec& spec);

/// Five-subdivides X, adds apexes a_1..a_{kappa+1}, and for every edge uv with
/// path u s1..s5 v joins a_phi(u,uv) - s1, a_{kappa+1} - s3, a_phi(v,uv) - s5.
/// Parts: {u,s1,s2} to colour phi(u,uv), {s2,s3,s4} to kappa+1, {s4,s5,v} to
/// phi(v,uv); every part is a tree of radius 2 centred at its apex.
/// InputError if X is disconnected or edgeless, or if phi is not proper.
CoverCertificate build_tree_cover(const Graph& x, const IncidenceColoring& phi);

/// Wall of order n with horizontal edges subdivided 5 times and vertical
/// edges 7 times, covered by two radius-2 trees and one Apex(P5) part
/// whose apex has eccentricity 2 in it.
CoverCertificate build_three_cover_wall(int n);

/// Five-subdivides X and applies build_from with V2 = {u,s1,s2,s4,s5,v} and
/// V1 = {s2,s3,s4} over all edges. Part 1 is Apex(P3), part 2 Apex(S_delta^*).
CoverCertificate build_two_cover(const Graph& x);

} // namespace isocover
