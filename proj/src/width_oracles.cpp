#include "isocover/width_oracles.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>

#include "isocover/errors.hpp"

namespace isocover {

namespace {

using Mask = std::uint32_t;
constexpr std::uint8_t kUnknown = 0xFF;

std::size_t effective_bound(std::optional<std::size_t> bound) {
    return std::min(bound.value_or(oracle_bound()), kOracleHardCap);
}

void check_size(const Graph& g, std::optional<std::size_t> bound, const char* what) {
    const auto b = effective_bound(bound);
    if (g.order() > b)
        throw SizeError(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds oracle bound " +
                        std::to_string(b));
}

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nbr(g.order(), 0);
    for (auto [i, j] : g.edges()) {
        nbr[i] |= Mask{1} << j;
        nbr[j] |= Mask{1} << i;
    }
    return nbr;
}

template <class F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        Index i = static_cast<Index>(std::countr_zero(m));
        f(i);
        m &= m - 1;
    }
}

// Vertices outside S + v reachable from v through S.
Mask q_set(const std::vector<Mask>& nbr, Mask s, Index v) {
    Mask comp = 0;
    Mask frontier = nbr[v] & s;
    while (frontier) {
        comp |= frontier;
        Mask next = 0;
        for_each_bit(frontier, [&](Index x) { next |= nbr[x]; });
        frontier = next & s & ~comp;
    }
    Mask reach = nbr[v];
    for_each_bit(comp, [&](Index x) { reach |= nbr[x]; });
    return reach & ~s & ~(Mask{1} << v);
}

Mask boundary(const std::vector<Mask>& nbr, Mask s) {
    Mask out = 0;
    for_each_bit(s, [&](Index x) {
        if (nbr[x] & ~s)
            out |= Mask{1} << x;
    });
    return out;
}

std::vector<VertexLabel> labels_of(const Graph& g, Mask m) {
    std::vector<VertexLabel> out;
    for_each_bit(m, [&](Index x) { out.push_back(g.label(x)); });
    return out;
}

Mask full_mask(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Fill-in elimination along `order`: bag(v) = v + its later neighbours.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Index>& order) {
    const std::size_t n = g.order();
    TreeDecomposition d;
    if (n == 0) {
        d.bags.emplace_back();
        d.tree = Graph({VertexLabel::original(0)}, {});
        return d;
    }
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[order[i]] = i;
    auto nbr = neighbor_masks(g);

    std::vector<LabelEdge> tree_edges;
    std::optional<std::size_t> last_root;
    for (std::size_t i = 0; i < n; ++i) {
        const Index v = order[i];
        Mask later = 0;
        for_each_bit(nbr[v], [&](Index x) {
            if (pos[x] > i)
                later |= Mask{1} << x;
        });
        for_each_bit(later, [&](Index x) { nbr[x] |= later & ~(Mask{1} << x); });
        d.bags.push_back(labels_of(g, later | (Mask{1} << v)));

        if (later) {
            Index first = 0;
            std::size_t best = n;
            for_each_bit(later, [&](Index x) {
                if (pos[x] < best) {
                    best = pos[x];
                    first = x;
                }
            });
            tree_edges.emplace_back(VertexLabel::original(static_cast<std::int64_t>(i)),
                                    VertexLabel::original(static_cast<std::int64_t>(pos[first])));
        } else {
            // Roots of separate components are chained so the bags form one tree.
            if (last_root)
                tree_edges.emplace_back(VertexLabel::original(static_cast<std::int64_t>(*last_root)),
                                        VertexLabel::original(static_cast<std::int64_t>(i)));
            last_root = i;
        }
    }
    std::vector<VertexLabel> ids;
    for (std::size_t i = 0; i < n; ++i)
        ids.push_back(VertexLabel::original(static_cast<std::int64_t>(i)));
    d.tree = Graph(std::move(ids), tree_edges);
    return d;
}

} // namespace

std::size_t TreeDecomposition::width() const {
    std::size_t best = 0;
    for (const auto& b : bags)
        best = std::max(best, b.size());
    return best == 0 ? 0 : best - 1;
}

std::size_t PathDecomposition::width() const {
    std::size_t best = 0;
    for (const auto& b : bags)
        best = std::max(best, b.size());
    return best == 0 ? 0 : best - 1;
}

TreeDecomposition PathDecomposition::as_tree() const {
    TreeDecomposition d;
    d.bags = bags;
    std::vector<VertexLabel> ids;
    std::vector<LabelEdge> es;
    for (std::size_t i = 0; i < bags.size(); ++i) {
        ids.push_back(VertexLabel::original(static_cast<std::int64_t>(i)));
        if (i > 0)
            es.emplace_back(ids[i - 1], ids[i]);
    }
    d.tree = Graph(std::move(ids), es);
    return d;
}

std::size_t oracle_bound() {
    const char* env = std::getenv("ISOCOVER_ORACLE_BOUND");
    if (env == nullptr || *env == '\0')
        return kOracleDefaultBound;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end)
        throw InputError(std::string("ISOCOVER_ORACLE_BOUND is not a number: ") + env);
    return std::min(value, kOracleHardCap);
}

TreewidthResult exact_treewidth(const Graph& g, std::optional<std::size_t> bound) {
    check_size(g, bound, "exact_treewidth");
    const std::size_t n = g.order();
    const auto nbr = neighbor_masks(g);
    const Mask all = full_mask(n);

    // tw[S]: best width for eliminating S first; last[S]: the vertex eliminated last within S.
    std::vector<std::uint8_t> tw(std::size_t{1} << n, 0);
    std::vector<std::uint8_t> last(std::size_t{1} << n, 0);
    for (Mask s = 1; s <= all && s != 0; ++s) {
        std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
        for_each_bit(s, [&](Index v) {
            const Mask rest = s & ~(Mask{1} << v);
            const auto q = static_cast<std::uint8_t>(std::popcount(q_set(nbr, rest, v)));
            const auto w = std::max(tw[rest], q);
            if (w < best) {
                best = w;
                last[s] = static_cast<std::uint8_t>(v);
            }
        });
        tw[s] = best;
        if (s == all)
            break;
    }

    std::vector<Index> order(n);
    Mask s = all;
    for (std::size_t k = n; k-- > 0;) {
        order[k] = last[s];
        s &= ~(Mask{1} << last[s]);
    }
    auto d = decomposition_from_order(g, order);
    return {n == 0 ? std::size_t{0} : std::size_t{tw[all]}, std::move(d)};
}

PathwidthResult exact_pathwidth(const Graph& g, std::optional<std::size_t> bound) {
    check_size(g, bound, "exact_pathwidth");
    const std::size_t n = g.order();
    const auto nbr = neighbor_masks(g);
    const Mask all = full_mask(n);

    // vs[S]: vertex separation of the best ordering whose prefix is S.
    std::vector<std::uint8_t> vs(std::size_t{1} << n, 0);
    std::vector<std::uint8_t> last(std::size_t{1} << n, 0);
    for (Mask s = 1; s <= all && s != 0; ++s) {
        std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
        for_each_bit(s, [&](Index v) {
            const Mask rest = s & ~(Mask{1} << v);
            if (vs[rest] < best) {
                best = vs[rest];
                last[s] = static_cast<std::uint8_t>(v);
            }
        });
        vs[s] = std::max(best, static_cast<std::uint8_t>(std::popcount(boundary(nbr, s))));
        if (s == all)
            break;
    }

    PathDecomposition d;
    std::vector<Index> order(n);
    Mask s = all;
    for (std::size_t k = n; k-- > 0;) {
        order[k] = last[s];
        s &= ~(Mask{1} << last[s]);
    }
    Mask prefix = 0;
    for (Index v : order) {
        d.bags.push_back(labels_of(g, boundary(nbr, prefix) | (Mask{1} << v)));
        prefix |= Mask{1} << v;
    }
    if (n == 0)
        d.bags.emplace_back();
    return {n == 0 ? std::size_t{0} : std::size_t{vs[all]}, std::move(d)};
}

TreedepthResult exact_treedepth(const Graph& g, std::optional<std::size_t> bound) {
    check_size(g, bound, "exact_treedepth");
    const std::size_t n = g.order();
    const auto nbr = neighbor_masks(g);

    std::vector<std::uint8_t> memo(std::size_t{1} << n, kUnknown);
    std::vector<std::uint8_t> root(std::size_t{1} << n, 0);

    auto component_of = [&](Mask s, Index v) {
        Mask comp = Mask{1} << v;
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](Index x) { next |= nbr[x]; });
            frontier = next & s & ~comp;
            comp |= frontier;
        }
        return comp;
    };

    std::function<std::uint8_t(Mask)> td = [&](Mask s) -> std::uint8_t {
        if (s == 0)
            return 0;
        if (memo[s] != kUnknown)
            return memo[s];
        const Mask comp = component_of(s, static_cast<Index>(std::countr_zero(s)));
        std::uint8_t value;
        if (comp != s) {
            value = std::max(td(comp), td(s & ~comp));
        } else {
            value = std::numeric_limits<std::uint8_t>::max();
            for_each_bit(s, [&](Index v) {
                const auto d = td(s & ~(Mask{1} << v));
                if (d + 1 < value) {
                    value = static_cast<std::uint8_t>(d + 1);
                    root[s] = static_cast<std::uint8_t>(v);
                }
            });
        }
        memo[s] = value;
        return value;
    };

    const Mask all = full_mask(n);
    const auto depth = td(all);

    TreedepthResult out{depth, {}};
    std::function<void(Mask, std::optional<VertexLabel>)> build = [&](Mask s, std::optional<VertexLabel> above) {
        while (s) {
            const Mask comp = component_of(s, static_cast<Index>(std::countr_zero(s)));
            const Index r = root[comp];
            out.tree.parent[g.label(r)] = above;
            build(comp & ~(Mask{1} << r), g.label(r));
            s &= ~comp;
        }
    };
    build(all, std::nullopt);
    return out;
}

Report verify_tree_decomposition(const Graph& g, const TreeDecomposition& d) {
    const std::string check = "tree-decomposition";
    const std::size_t k = d.bags.size();
    if (d.tree.order() != k)
        return Report::fail(check, "tree has " + std::to_string(d.tree.order()) + " nodes for " +
                                       std::to_string(k) + " bags");
    for (std::size_t i = 0; i < k; ++i)
        if (d.tree.label(static_cast<Index>(i)) != VertexLabel::original(static_cast<std::int64_t>(i)))
            return Report::fail(check, "tree nodes are not the bag ids 0.." + std::to_string(k - 1));
    if (k > 0 && !is_tree(d.tree))
        return Report::fail(check, "bag graph is not a tree");
    if (k == 0 && !g.empty())
        return Report::fail(check, "no bags");

    std::vector<std::vector<std::size_t>> trace(g.order());
    for (std::size_t b = 0; b < k; ++b)
        for (const auto& v : d.bags[b]) {
            auto i = g.find(v);
            if (!i)
                return Report::fail(check, "bag " + std::to_string(b) + " holds unknown vertex " + v.str());
            if (!trace[*i].empty() && trace[*i].back() == b)
                return Report::fail(check, "bag " + std::to_string(b) + " repeats " + v.str());
            trace[*i].push_back(b);
        }
    for (Index i = 0; i < g.order(); ++i) {
        if (trace[i].empty())
            return Report::fail(check, "vertex " + g.label(i).str() + " in no bag");
        std::vector<VertexLabel> nodes;
        for (auto b : trace[i])
            nodes.push_back(VertexLabel::original(static_cast<std::int64_t>(b)));
        if (!is_connected(induced_subgraph(d.tree, nodes)))
            return Report::fail(check, "bags holding " + g.label(i).str() + " are not connected");
    }
    for (auto [i, j] : g.edges()) {
        std::vector<std::size_t> both;
        std::set_intersection(trace[i].begin(), trace[i].end(), trace[j].begin(), trace[j].end(),
                              std::back_inserter(both));
        if (both.empty())
            return Report::fail(check, "edge " + g.label(i).str() + " " + g.label(j).str() + " in no bag");
    }
    return Report::ok(check);
}

Report verify_path_decomposition(const Graph& g, const PathDecomposition& d) {
    auto r = verify_tree_decomposition(g, d.as_tree());
    r.check = "path-decomposition";
    return r;
}

} // namespace isocover
