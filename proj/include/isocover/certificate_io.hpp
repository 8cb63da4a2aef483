#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isocover/cover.hpp"
#include "isocover/incidence_coloring.hpp"
#include "isocover/verifiers.hpp"
#include "isocover/width_oracles.hpp"

namespace isocover {

inline constexpr std::string_view kCertificateFormat = "isocover-certificate/1";

/// Canonical JSON text (2-space indent, trailing newline). Graphs travel as
/// graph6 plus a label array, so reading back needs no regeneration.
std::string certificate_to_json(const CoverCertificate& cert);

/// Inverse of certificate_to_json. Anything that cannot be decoded into a
/// certificate is an InputError. Semantic
/// problems (parts outside the graph, broken paths) are left to the verifiers.
CoverCertificate certificate_from_json(std::string_view text);

/// [{vertex, edge: [u, v], color}] in incidence order, plus kappa.
std::string coloring_to_json(const IncidenceColoring& phi);
IncidenceColoring coloring_from_json(std::string_view text);

/// {"pass": bool, "checks": [{check, pass, witness?}]}
std::string reports_to_json(const std::vector<Report>& reports);

/// Treewidth, pathwidth and treedepth with their decompositions and the
/// verifier verdict on each.
std::string widths_to_json(const Graph& g, const TreewidthResult& tw, const PathwidthResult& pw,
                           const TreedepthResult& td);

/// Graphviz rendering with one fill colour per part; vertices shared by parts
/// get split fills. Subdivision vertices are squares and apexes double circles.
/// A certificate without parts is an InputError.
std::string certificate_to_dot(const CoverCertificate& cert);

} // namespace isocover
