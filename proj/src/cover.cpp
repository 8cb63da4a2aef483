#include "isocover/cover.hpp"

#include <algorithm>
#include <set>

#include "isocover/generators.hpp"

namespace isocover {

std::string Role::str() const {
    switch (kind) {
    case Kind::TreeRadius2:
        return "tree-radius-2";
    case Kind::ApexP3:
        return "apex-P3";
    case Kind::ApexP5:
        return "apex-P5";
    case Kind::ApexStar:
        return "apex-star(" + std::to_string(delta) + ")";
    }
    return {};
}

Role Role::parse(const std::string& text) {
    if (text == "tree-radius-2")
        return tree_radius_2();
    if (text == "apex-P3")
        return apex_p3();
    if (text == "apex-P5")
        return apex_p5();
    const std::string prefix = "apex-star(";
    if (text.starts_with(prefix) && text.ends_with(")")) {
        auto digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        if (!digits.empty() && digits.size() < 9 &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            int delta = std::stoi(digits);
            if (delta >= 1)
                return apex_star(delta);
        }
    }
    throw InputError("unknown role '" + text + "'");
}

namespace {

std::vector<VertexLabel> sorted_unique(const std::set<VertexLabel>& s) { return {s.begin(), s.end()}; }

void require_coverable(const Graph& x) {
    if (x.size() == 0)
        throw InputError("source graph has no edges to cover");
    if (!is_connected(x))
        throw InputError("source graph must be connected");
}

} // namespace

BuiltFrom build_from(const Graph& base, const ApexSpec& spec) {
    const auto a1 = VertexLabel::apex(1);
    const auto a2 = VertexLabel::apex(2);
    std::vector<LabelEdge> fans;
    std::set<VertexLabel> p1{a1}, p2{a2};
    for (const auto& v : spec.v1) {
        base.index_of(v);
        fans.emplace_back(a1, v);
        p1.insert(v);
    }
    for (const auto& v : spec.v2) {
        base.index_of(v);
        fans.emplace_back(a2, v);
        p2.insert(v);
    }
    return {with_additions(base, {a1, a2}, fans), sorted_unique(p1), sorted_unique(p2)};
}

CoverCertificate build_tree_cover(const Graph& x, const IncidenceColoring& phi) {
    require_coverable(x);
    if (!is_proper(x, phi))
        throw InputError("incidence colouring is not proper");

    const int kappa = phi.kappa();
    auto [base, map] = subdivide_all(x, 5);

    std::vector<VertexLabel> apexes;
    for (int i = 1; i <= kappa + 1; ++i)
        apexes.push_back(VertexLabel::apex(i));
    std::vector<std::set<VertexLabel>> members(static_cast<std::size_t>(kappa) + 1);
    for (int i = 0; i <= kappa; ++i)
        members[static_cast<std::size_t>(i)].insert(apexes[static_cast<std::size_t>(i)]);

    std::vector<LabelEdge> attach;
    for (const auto& [e, s] : map.paths) {
        const auto& [u, v] = e;
        auto cu = static_cast<std::size_t>(phi.at({u, v}) - 1);
        auto cv = static_cast<std::size_t>(phi.at({v, u}) - 1);
        auto mid = static_cast<std::size_t>(kappa);
        attach.emplace_back(apexes[cu], s[0]);
        attach.emplace_back(apexes[mid], s[2]);
        attach.emplace_back(apexes[cv], s[4]);
        members[cu].insert({u, s[0], s[1]});
        members[mid].insert({s[1], s[2], s[3]});
        members[cv].insert({s[3], s[4], v});
    }

    CoverCertificate cert{with_additions(base, apexes, attach), x, std::move(map), {}};
    for (std::size_t i = 0; i < members.size(); ++i)
        cert.parts.push_back({sorted_unique(members[i]), Role::tree_radius_2(), apexes[i], 2});
    return cert;
}

CoverCertificate build_three_cover_wall(int n) {
    const Graph x = wall(n);
    const int m = 2 * n + 1;
    auto coord = [m](const VertexLabel& v) { return grid_coord(v.id(), m); };
    auto is_horizontal = [&](const SourceEdge& e) { return coord(e.first).row == coord(e.second).row; };

    auto [base, map] = subdivide_each(x, [&](const SourceEdge& e) { return is_horizontal(e) ? 5 : 7; });

    auto has_vertical = [&](const VertexLabel& v) {
        auto [a, b] = coord(v);
        bool down = a < n && a % 2 == b % 2;
        bool up = a > 1 && (a - 1) % 2 == b % 2;
        return down || up;
    };
    auto has_right = [&](const VertexLabel& v) { return coord(v).col < m; };
    // Tree part (0 or 1) taking the middle of the row-a horizontal edges; the other
    // tree part takes the segment next to the right endpoint.
    auto alpha = [](int row) { return row % 2 == 1 ? 0 : 1; };

    const std::vector<VertexLabel> apexes{VertexLabel::apex(1), VertexLabel::apex(2), VertexLabel::apex(3)};
    constexpr std::size_t kPink = 2;
    std::vector<std::set<VertexLabel>> members(3);
    for (std::size_t i = 0; i < 3; ++i)
        members[i].insert(apexes[i]);
    std::vector<LabelEdge> attach;

    // p[first..last] joins part `who`; the apex is joined to each vertex of `hubs`.
    auto piece = [&](std::size_t who, const std::vector<VertexLabel>& p, std::size_t first, std::size_t last,
                     std::initializer_list<std::size_t> hubs) {
        for (std::size_t k = first; k <= last; ++k)
            members[who].insert(p[k]);
        for (std::size_t h : hubs)
            attach.emplace_back(apexes[who], p[h]);
    };

    for (const auto& [e, internal] : map.paths) {
        const auto& [u, v] = e;
        std::vector<VertexLabel> p{u};
        p.insert(p.end(), internal.begin(), internal.end());
        p.push_back(v);

        if (is_horizontal(e)) {
            auto al = static_cast<std::size_t>(alpha(coord(u).row));
            auto be = 1 - al;
            if (has_vertical(u)) {
                piece(kPink, p, 0, 2, {1});
                piece(al, p, 2, 4, {3});
            } else {
                piece(kPink, p, 0, 3, {1, 3});
                piece(al, p, 3, 4, {3});
            }
            piece(be, p, 4, 6, {5});
        } else {
            auto top = static_cast<std::size_t>(alpha(coord(u).row));
            auto bottom = static_cast<std::size_t>(alpha(coord(v).row));
            if (has_right(u)) {
                piece(kPink, p, 0, 2, {1});
                piece(top, p, 2, 4, {3});
            } else {
                piece(kPink, p, 0, 3, {1, 3});
                piece(top, p, 3, 4, {3});
            }
            if (has_right(v)) {
                piece(kPink, p, 6, 8, {7});
                piece(bottom, p, 4, 6, {5});
            } else {
                piece(kPink, p, 5, 8, {5, 7});
                piece(bottom, p, 4, 5, {5});
            }
        }
    }

    CoverCertificate cert{with_additions(base, apexes, attach), x, std::move(map), {}};
    cert.parts.push_back({sorted_unique(members[0]), Role::tree_radius_2(), apexes[0], 2});
    cert.parts.push_back({sorted_unique(members[1]), Role::tree_radius_2(), apexes[1], 2});
    cert.parts.push_back({sorted_unique(members[2]), Role::apex_p5(), apexes[2], 2});
    return cert;
}

CoverCertificate build_two_cover(const Graph& x) {
    require_coverable(x);
    auto [base, map] = subdivide_all(x, 5);

    std::set<VertexLabel> v1, v2;
    for (const auto& [e, s] : map.paths) {
        v2.insert({e.first, s[0], s[1], s[3], s[4], e.second});
        v1.insert({s[1], s[2], s[3]});
    }
    auto built = build_from(base, {sorted_unique(v1), sorted_unique(v2)});

    CoverCertificate cert{std::move(built.graph), x, std::move(map), {}};
    const int delta = static_cast<int>(max_degree(x));
    cert.parts.push_back({std::move(built.part1), Role::apex_p3(), VertexLabel::apex(1), 1});
    cert.parts.push_back({std::move(built.part2), Role::apex_star(delta), VertexLabel::apex(2), 1});
    return cert;
}

} // namespace isocover
