#include "isocover/verifiers.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "isocover/generators.hpp"

namespace isocover {

namespace {

std::string pair_str(const VertexLabel& a, const VertexLabel& b) { return a.str() + " " + b.str(); }

// Components of H with `skip` removed, as lists of H indices.
std::vector<std::vector<Index>> components_without(const Graph& h, std::optional<Index> skip) {
    std::vector<std::vector<Index>> comps;
    std::vector<char> seen(h.order(), 0);
    if (skip)
        seen[*skip] = 1;
    for (Index s = 0; s < h.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Index> comp{s};
        seen[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (Index y : h.neighbors(comp[k]))
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph component_graph(const Graph& h, const std::vector<Index>& comp) {
    std::vector<VertexLabel> labels;
    for (Index i : comp)
        labels.push_back(h.label(i));
    return induced_subgraph(h, labels);
}

std::string component_str(const Graph& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.order(); ++i) {
        if (i > 0)
            out += ",";
        out += c.label(static_cast<Index>(i)).str();
    }
    return out + "}";
}

// Rooted BFS tree of a connected graph, written into `parent`.
void bfs_tree(const Graph& c, Index root, const std::optional<VertexLabel>& above,
              std::map<VertexLabel, std::optional<VertexLabel>>& parent) {
    std::vector<char> seen(c.order(), 0);
    std::vector<Index> queue{root};
    seen[root] = 1;
    parent[c.label(root)] = above;
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (Index y : c.neighbors(queue[k]))
            if (!seen[y]) {
                seen[y] = 1;
                parent[c.label(y)] = c.label(queue[k]);
                queue.push_back(y);
            }
}

// Balanced elimination of a path given in order.
void bisect_path(const std::vector<VertexLabel>& p, std::ptrdiff_t lo, std::ptrdiff_t hi,
                 const std::optional<VertexLabel>& above,
                 std::map<VertexLabel, std::optional<VertexLabel>>& parent) {
    if (lo > hi)
        return;
    auto mid = lo + (hi - lo) / 2;
    const auto& m = p[static_cast<std::size_t>(mid)];
    parent[m] = above;
    bisect_path(p, lo, mid - 1, m, parent);
    bisect_path(p, mid + 1, hi, m, parent);
}

bool is_path_graph(const Graph& c) { return is_tree(c) && max_degree(c) <= 2; }

std::vector<VertexLabel> path_order(const Graph& c) {
    Index start = 0;
    for (Index i = 0; i < c.order(); ++i)
        if (c.degree(i) <= 1) {
            start = i;
            break;
        }
    std::vector<VertexLabel> out;
    std::optional<Index> prev;
    Index cur = start;
    while (true) {
        out.push_back(c.label(cur));
        std::optional<Index> next;
        for (Index y : c.neighbors(cur))
            if (!prev || y != *prev)
                next = y;
        if (!next)
            break;
        prev = cur;
        cur = *next;
    }
    return out;
}

} // namespace

std::size_t EliminationTree::depth() const {
    std::map<VertexLabel, std::size_t> memo;
    std::function<std::size_t(const VertexLabel&)> level = [&](const VertexLabel& v) -> std::size_t {
        if (auto it = memo.find(v); it != memo.end())
            return it->second;
        auto it = parent.find(v);
        std::size_t d = (it == parent.end() || !it->second) ? 1 : level(*it->second) + 1;
        memo[v] = d;
        return d;
    };
    std::size_t best = 0;
    for (const auto& [v, p] : parent)
        best = std::max(best, level(v));
    return best;
}

std::string ApexFamily::str() const {
    return kind == Kind::Path ? "P" + std::to_string(size) : "S*" + std::to_string(size);
}

Report verify_isometric(const Graph& g, std::span<const VertexLabel> subset) {
    const std::string check = "isometric";
    if (subset.empty())
        return Report::fail(check, "empty vertex set");
    const Graph h = induced_subgraph(g, subset);
    std::vector<Index> to_g(h.order());
    for (Index i = 0; i < h.order(); ++i)
        to_g[i] = g.index_of(h.label(i));

    for (Index s = 0; s < h.order(); ++s) {
        auto dh = bfs_distances(h, s);
        auto dg = bfs_distances(g, to_g[s]);
        for (Index t = s + 1; t < h.order(); ++t) {
            if (dh[t] == kUnreachable)
                return Report::fail(check, "disconnected: " + pair_str(h.label(s), h.label(t)));
            if (dh[t] != dg[to_g[t]])
                return Report::fail(check, pair_str(h.label(s), h.label(t)) + ": dist_H=" +
                                               std::to_string(dh[t]) + " dist_G=" + std::to_string(dg[to_g[t]]));
        }
    }
    return Report::ok(check);
}

Report verify_edge_cover(const Graph& g, const std::vector<std::vector<VertexLabel>>& parts) {
    const std::string check = "edge-cover";
    std::vector<std::vector<char>> member(parts.size(), std::vector<char>(g.order(), 0));
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (const auto& v : parts[p])
            member[p][g.index_of(v)] = 1;
    for (auto [i, j] : g.edges()) {
        bool covered = std::any_of(member.begin(), member.end(), [&](const auto& m) { return m[i] && m[j]; });
        if (!covered)
            return Report::fail(check, "uncovered edge " + pair_str(g.label(i), g.label(j)));
    }
    return Report::ok(check);
}

Report verify_induced_subdivision(const Graph& g, const Graph& x, const SubdivisionMap& map) {
    const std::string check = "induced-subdivision";
    for (const auto& [u, v] : x.label_edges())
        if (!map.paths.contains(make_source_edge(u, v)))
            throw InputError("subdivision map has no entry for edge " + pair_str(u, v));
    for (const auto& [e, path] : map.paths)
        if (!x.has_edge(e.first, e.second))
            return Report::fail(check, "map entry for non-edge " + pair_str(e.first, e.second));

    constexpr int kFree = -1, kOriginal = -2;
    std::vector<int> owner(g.order(), kFree);
    for (const auto& v : x.vertices()) {
        auto i = g.find(v);
        if (!i)
            return Report::fail(check, "original vertex " + v.str() + " missing");
        owner[*i] = kOriginal;
    }

    std::set<std::pair<Index, Index>> expected;
    int edge_no = 0;
    for (const auto& [e, internal] : map.paths) {
        std::vector<Index> walk{g.index_of(e.first)};
        for (const auto& s : internal) {
            auto i = g.find(s);
            if (!i)
                return Report::fail(check, "path vertex " + s.str() + " missing");
            if (owner[*i] != kFree)
                return Report::fail(check, "vertex " + s.str() + " used twice");
            owner[*i] = edge_no;
            walk.push_back(*i);
        }
        walk.push_back(g.index_of(e.second));
        for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
            Index a = walk[k], b = walk[k + 1];
            if (!g.adjacent(a, b))
                return Report::fail(check, "missing path edge " + pair_str(g.label(a), g.label(b)));
            expected.emplace(std::min(a, b), std::max(a, b));
        }
        ++edge_no;
    }
    for (auto [i, j] : g.edges())
        if (owner[i] != kFree && owner[j] != kFree && !expected.contains({i, j}))
            return Report::fail(check, "chord " + pair_str(g.label(i), g.label(j)));
    return Report::ok(check);
}

Report verify_tree_radius(const Graph& g, std::span<const VertexLabel> subset, std::size_t r,
                          const VertexLabel& center) {
    const std::string check = "tree-radius";
    if (std::find(subset.begin(), subset.end(), center) == subset.end())
        throw InputError("centre " + center.str() + " is not in the vertex set");
    const Graph h = induced_subgraph(g, subset);
    if (!is_connected(h))
        return Report::fail(check, "not connected");
    if (!is_tree(h)) {
        // A non-tree connected graph has more than |V|-1 edges; report one that closes a cycle.
        std::vector<Index> comp(h.order());
        for (Index i = 0; i < h.order(); ++i)
            comp[i] = i;
        std::function<Index(Index)> root = [&](Index i) { return comp[i] == i ? i : comp[i] = root(comp[i]); };
        for (auto [i, j] : h.edges()) {
            Index a = root(i), b = root(j);
            if (a == b)
                return Report::fail(check, "cycle through edge " + pair_str(h.label(i), h.label(j)));
            comp[a] = b;
        }
    }
    auto dist = bfs_distances(h, h.index_of(center));
    for (Index i = 0; i < h.order(); ++i)
        if (static_cast<std::size_t>(dist[i]) > r)
            return Report::fail(check, h.label(i).str() + " at distance " + std::to_string(dist[i]) +
                                           " from " + center.str());
    return Report::ok(check);
}

Report verify_apex(const Graph& g, std::span<const VertexLabel> subset, const VertexLabel& apex,
                   ApexFamily family) {
    const std::string check = "apex-" + family.str();
    if (std::find(subset.begin(), subset.end(), apex) == subset.end())
        throw InputError("apex " + apex.str() + " is not in the vertex set");
    const Graph h = induced_subgraph(g, subset);
    for (const auto& comp : components_without(h, h.index_of(apex))) {
        const Graph c = component_graph(h, comp);
        if (!is_tree(c))
            return Report::fail(check, "component " + component_str(c) + " is not a tree");
        if (family.kind == ApexFamily::Kind::Path) {
            if (max_degree(c) > 2 || c.order() > static_cast<std::size_t>(family.size))
                return Report::fail(check, "component " + component_str(c) + " is not a subgraph of P" +
                                               std::to_string(family.size));
            continue;
        }
        bool embeds = false;
        for (Index centre = 0; centre < c.order() && !embeds; ++centre) {
            if (c.degree(centre) > static_cast<std::size_t>(family.size))
                continue;
            bool ok = true;
            for (Index i = 0; i < c.order() && ok; ++i)
                if (i != centre && c.degree(i) > 2)
                    ok = false;
            auto ecc = eccentricity(c, centre);
            embeds = ok && ecc && *ecc <= 2;
        }
        if (!embeds)
            return Report::fail(check, "component " + component_str(c) + " is not a subgraph of S*" +
                                           std::to_string(family.size));
    }
    return Report::ok(check);
}

Report verify_elimination_tree(const Graph& g, std::span<const VertexLabel> subset,
                               const EliminationTree& tree) {
    const std::string check = "elimination-tree";
    std::set<VertexLabel> want(subset.begin(), subset.end());
    for (const auto& v : want)
        if (!tree.parent.contains(v))
            return Report::fail(check, "vertex " + v.str() + " missing from tree");
    for (const auto& [v, p] : tree.parent) {
        if (!want.contains(v))
            return Report::fail(check, "vertex " + v.str() + " not in the vertex set");
        if (p && !want.contains(*p))
            return Report::fail(check, "parent " + p->str() + " of " + v.str() + " not in the vertex set");
    }

    std::map<VertexLabel, std::size_t> level;
    for (const auto& [v, p] : tree.parent) {
        std::vector<VertexLabel> chain{v};
        std::optional<VertexLabel> cur = p;
        while (cur && !level.contains(*cur)) {
            if (chain.size() > want.size())
                return Report::fail(check, "parent pointers cycle through " + v.str());
            chain.push_back(*cur);
            cur = tree.parent.at(*cur);
        }
        std::size_t base = cur ? level.at(*cur) : 0;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            level[*it] = ++base;
    }

    auto ancestor_related = [&](VertexLabel a, VertexLabel b) {
        if (level.at(a) < level.at(b))
            std::swap(a, b);
        while (level.at(a) > level.at(b))
            a = *tree.parent.at(a);
        return a == b;
    };
    const Graph h = induced_subgraph(g, subset);
    for (const auto& [u, v] : h.label_edges())
        if (!ancestor_related(u, v))
            return Report::fail(check, "edge " + pair_str(u, v) + " joins unrelated vertices");
    return Report::ok(check);
}

std::size_t role_treedepth_bound(const Role& role) {
    switch (role.kind) {
    case Role::Kind::TreeRadius2:
    case Role::Kind::ApexP3:
        return 3;
    case Role::Kind::ApexP5:
    case Role::Kind::ApexStar:
        return 4;
    }
    return 0;
}

TreedepthCertificate certify_treedepth_ub(const Graph& g, std::span<const VertexLabel> subset,
                                          const Role& role, const VertexLabel& root) {
    const std::string check = "treedepth";
    if (std::find(subset.begin(), subset.end(), root) == subset.end())
        throw InputError("root " + root.str() + " is not in the vertex set");
    const Graph h = induced_subgraph(g, subset);
    const Index r = h.index_of(root);

    EliminationTree tree;
    if (role.kind == Role::Kind::TreeRadius2) {
        if (!is_tree(h))
            return {Report::fail(check, "part is not a tree"), std::nullopt};
        bfs_tree(h, r, std::nullopt, tree.parent);
    } else {
        tree.parent[root] = std::nullopt;
        for (const auto& comp : components_without(h, r)) {
            const Graph c = component_graph(h, comp);
            if (!is_tree(c))
                return {Report::fail(check, "component " + component_str(c) + " is not a tree"), std::nullopt};
            if (is_path_graph(c)) {
                auto p = path_order(c);
                bisect_path(p, 0, static_cast<std::ptrdiff_t>(p.size()) - 1, root, tree.parent);
                continue;
            }
            Index centre = 0;
            std::size_t best = c.order();
            for (Index i = 0; i < c.order(); ++i)
                if (auto e = eccentricity(c, i); e && *e < best) {
                    best = *e;
                    centre = i;
                }
            bfs_tree(c, centre, root, tree.parent);
        }
    }

    const std::size_t bound = role_treedepth_bound(role);
    if (tree.depth() > bound)
        return {Report::fail(check, "elimination tree depth " + std::to_string(tree.depth()) +
                                        " exceeds " + std::to_string(bound) + " for role " + role.str()),
                std::nullopt};
    if (auto rep = verify_elimination_tree(g, subset, tree); !rep)
        return {Report::fail(check, rep.witness), std::nullopt};
    return {Report::ok(check), std::move(tree)};
}

Report verify_minor_model(const Graph& g, const Graph& pattern, const MinorModel& model) {
    const std::string check = "minor-model";
    for (const auto& [p, set] : model.branch_sets)
        if (!pattern.contains(p))
            return Report::fail(check, "branch set for unknown pattern vertex " + p.str());

    std::map<VertexLabel, VertexLabel> owner;
    for (const auto& p : pattern.vertices()) {
        auto it = model.branch_sets.find(p);
        if (it == model.branch_sets.end() || it->second.empty())
            return Report::fail(check, "empty branch set for " + p.str());
        for (const auto& v : it->second) {
            if (!g.contains(v))
                return Report::fail(check, "branch vertex " + v.str() + " not in graph");
            auto [pos, fresh] = owner.emplace(v, p);
            if (!fresh && pos->second != p)
                return Report::fail(check, "branch sets of " + pair_str(pos->second, p) + " share " + v.str());
        }
        if (!is_connected(induced_subgraph(g, it->second)))
            return Report::fail(check, "branch set of " + p.str() + " is disconnected");
    }

    for (const auto& [p, q] : pattern.label_edges()) {
        auto key = make_source_edge(p, q);
        auto it = model.edge_witnesses.find(key);
        if (it == model.edge_witnesses.end())
            return Report::fail(check, "no witness for pattern edge " + pair_str(p, q));
        const auto& [x, y] = it->second;
        auto ox = owner.find(x);
        auto oy = owner.find(y);
        bool ends_ok = ox != owner.end() && oy != owner.end() &&
                       ((ox->second == p && oy->second == q) || (ox->second == q && oy->second == p));
        if (!ends_ok || !g.has_edge(x, y))
            return Report::fail(check, "bad witness " + pair_str(x, y) + " for pattern edge " + pair_str(p, q));
    }
    return Report::ok(check);
}

MinorCertificate certify_tw_lower_bound(const Graph& g, const SubdivisionMap& map, int n) {
    const std::string check = "tw-lower-bound";
    const Graph x = wall(n);
    Report sub;
    try {
        sub = verify_induced_subdivision(g, x, map);
    } catch (const InputError& e) {
        sub = Report::fail(check, e.what());
    }
    if (!sub)
        return {Report::fail(check, "rejected: " + sub.witness), std::nullopt};

    const int m = 2 * n + 1;
    // Wall columns 2j-1, 2j (and 2n+1 for the last) collapse onto grid column j.
    auto grid_vertex = [&](const VertexLabel& v) {
        auto [a, b] = grid_coord(v.id(), m);
        return VertexLabel::original(grid_id(a, std::min((b + 1) / 2, n), n));
    };

    MinorModel model;
    for (const auto& v : x.vertices())
        model.branch_sets[grid_vertex(v)].push_back(v);
    for (const auto& [e, internal] : map.paths) {
        auto p = grid_vertex(e.first);
        auto q = grid_vertex(e.second);
        auto& home = model.branch_sets[p];
        home.insert(home.end(), internal.begin(), internal.end());
        if (p != q) {
            const auto& last = internal.empty() ? e.first : internal.back();
            model.edge_witnesses.try_emplace(make_source_edge(p, q), last, e.second);
        }
    }
    for (auto& [p, set] : model.branch_sets)
        std::sort(set.begin(), set.end());

    if (auto rep = verify_minor_model(g, grid(n, n), model); !rep)
        return {Report::fail(check, rep.witness), std::nullopt};
    return {Report::ok(check), std::move(model)};
}

Graph contract_model(const Graph& g, const MinorModel& model) {
    std::map<VertexLabel, VertexLabel> owner;
    std::vector<VertexLabel> vs;
    for (const auto& [p, set] : model.branch_sets) {
        vs.push_back(p);
        for (const auto& v : set)
            owner.emplace(v, p);
    }
    std::vector<LabelEdge> es;
    for (const auto& [u, v] : g.label_edges()) {
        auto ou = owner.find(u);
        auto ov = owner.find(v);
        if (ou != owner.end() && ov != owner.end() && ou->second != ov->second)
            es.emplace_back(ou->second, ov->second);
    }
    return Graph(std::move(vs), es);
}

std::optional<int> wall_order(const Graph& source) {
    for (int n = 1; static_cast<std::size_t>(n) * (2 * n + 1) <= source.order(); ++n)
        if (static_cast<std::size_t>(n) * (2 * n + 1) == source.order())
            return source == wall(n) ? std::optional<int>(n) : std::nullopt;
    return std::nullopt;
}

std::vector<Report> verify_certificate(const CoverCertificate& cert) {
    std::vector<Report> reports;
    const Graph& g = cert.graph;

    // Structural sanity first: later checks index into the graph.
    {
        Report sane = Report::ok("parts");
        if (cert.parts.empty())
            sane = Report::fail("parts", "no parts");
        for (std::size_t i = 0; i < cert.parts.size() && sane; ++i) {
            const auto& part = cert.parts[i];
            const auto tag = "part " + std::to_string(i + 1);
            if (part.vertices.empty())
                sane = Report::fail("parts", tag + " is empty");
            else if (!std::is_sorted(part.vertices.begin(), part.vertices.end()) ||
                     std::adjacent_find(part.vertices.begin(), part.vertices.end()) != part.vertices.end())
                sane = Report::fail("parts", tag + " vertices not sorted and unique");
            for (const auto& v : part.vertices)
                if (sane && !g.contains(v))
                    sane = Report::fail("parts", tag + " vertex " + v.str() + " not in graph");
            if (sane && part.apex && !std::binary_search(part.vertices.begin(), part.vertices.end(), *part.apex))
                sane = Report::fail("parts", tag + " apex " + part.apex->str() + " not in part");
            if (sane && !part.apex)
                sane = Report::fail("parts", tag + " has no apex/centre");
        }
        reports.push_back(sane);
        if (!sane)
            return reports;
    }

    try {
        reports.push_back(verify_induced_subdivision(g, cert.source, cert.subdivision));
    } catch (const InputError& e) {
        reports.push_back(Report::fail("induced-subdivision", e.what()));
    }

    std::vector<std::vector<VertexLabel>> sets;
    for (const auto& part : cert.parts)
        sets.push_back(part.vertices);
    reports.push_back(verify_edge_cover(g, sets));

    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const auto& part = cert.parts[i];
        const auto prefix = "part[" + std::to_string(i + 1) + "].";
        auto tagged = [&](Report r) {
            r.check = prefix + r.check;
            reports.push_back(std::move(r));
        };
        tagged(verify_isometric(g, part.vertices));
        switch (part.role.kind) {
        case Role::Kind::TreeRadius2:
            tagged(verify_tree_radius(g, part.vertices, 2, *part.apex));
            break;
        case Role::Kind::ApexP3:
            tagged(verify_apex(g, part.vertices, *part.apex, ApexFamily::path(3)));
            break;
        case Role::Kind::ApexP5:
            tagged(verify_apex(g, part.vertices, *part.apex, ApexFamily::path(5)));
            break;
        case Role::Kind::ApexStar:
            tagged(verify_apex(g, part.vertices, *part.apex, ApexFamily::star(part.role.delta)));
            break;
        }
        if (part.radius) {
            const Graph h = induced_subgraph(g, part.vertices);
            auto ecc = eccentricity(h, h.index_of(*part.apex));
            if (ecc && *part.radius >= 0 && *ecc <= static_cast<std::size_t>(*part.radius))
                tagged(Report::ok("radius"));
            else
                tagged(Report::fail("radius", part.apex->str() + " has eccentricity " +
                                                  (ecc ? std::to_string(*ecc) : std::string("infinite")) +
                                                  " > claimed " + std::to_string(*part.radius)));
        }
        tagged(certify_treedepth_ub(g, part.vertices, part.role, *part.apex).report);
    }

    if (auto n = wall_order(cert.source))
        reports.push_back(certify_tw_lower_bound(g, cert.subdivision, *n).report);
    return reports;
}

} // namespace isocover
