#include "isocover/incidence_coloring.hpp"

#include <string>

#include "isocover/generators.hpp"

namespace isocover {

namespace {

std::string describe(const Incidence& inc) {
    return "(" + inc.vertex.str() + ", " + inc.vertex.str() + inc.other.str() + ")";
}

} // namespace

std::vector<Incidence> incidences(const Graph& x) {
    std::vector<Incidence> out;
    out.reserve(2 * x.size());
    for (Index i = 0; i < x.order(); ++i)
        for (Index j : x.neighbors(i))
            out.push_back({x.label(i), x.label(j)});
    return out;
}

IncidenceColoring::IncidenceColoring(int kappa) : kappa_(kappa) {
    if (kappa < 1)
        throw InputError("kappa must be positive, got " + std::to_string(kappa));
}

void IncidenceColoring::set(const Incidence& inc, int color) {
    if (color < 1 || color > kappa_)
        throw InputError("colour " + std::to_string(color) + " outside 1.." + std::to_string(kappa_));
    colors_[inc] = color;
}

std::optional<int> IncidenceColoring::color(const Incidence& inc) const {
    auto it = colors_.find(inc);
    if (it == colors_.end())
        return std::nullopt;
    return it->second;
}

int IncidenceColoring::at(const Incidence& inc) const {
    if (auto c = color(inc))
        return *c;
    throw InputError("incidence " + describe(inc) + " is not coloured");
}

bool is_proper(const Graph& x, const IncidenceColoring& phi) {
    auto all = incidences(x);
    if (phi.entries().size() != all.size())
        throw InputError("colouring has " + std::to_string(phi.entries().size()) +
                         " entries but the graph has " + std::to_string(all.size()) + " incidences");
    for (const auto& inc : all)
        phi.at(inc);

    for (Index i = 0; i < x.order(); ++i) {
        const auto& u = x.label(i);
        std::vector<char> used(static_cast<std::size_t>(phi.kappa()) + 1, 0);
        for (Index j : x.neighbors(i)) {
            const auto& v = x.label(j);
            int c = phi.at({u, v});
            if (c == phi.at({v, u}) || used[static_cast<std::size_t>(c)])
                return false;
            used[static_cast<std::size_t>(c)] = 1;
        }
    }
    return true;
}

IncidenceColoring greedy_coloring(const Graph& x) {
    std::map<Incidence, int> chosen;
    int top = 1;
    for (Index i = 0; i < x.order(); ++i) {
        const auto& u = x.label(i);
        for (Index j : x.neighbors(i)) {
            const auto& v = x.label(j);
            std::vector<char> blocked(x.degree(i) + 2, 0);
            auto block = [&blocked](int c) {
                if (c < static_cast<int>(blocked.size()))
                    blocked[static_cast<std::size_t>(c)] = 1;
            };
            for (Index k : x.neighbors(i))
                if (auto it = chosen.find({u, x.label(k)}); it != chosen.end())
                    block(it->second);
            if (auto it = chosen.find({v, u}); it != chosen.end())
                block(it->second);
            int c = 1;
            while (blocked[static_cast<std::size_t>(c)])
                ++c;
            chosen[{u, v}] = c;
            top = std::max(top, c);
        }
    }
    // The palette is [max_degree + 1] even when fewer colours end up used.
    IncidenceColoring phi(std::max(top, static_cast<int>(max_degree(x)) + 1));
    for (const auto& [inc, c] : chosen)
        phi.set(inc, c);
    return phi;
}

IncidenceColoring wall_3_coloring(int n) {
    const Graph x = wall(n);
    const int m = 2 * n + 1;
    IncidenceColoring phi(3);
    for (const auto& inc : incidences(x)) {
        auto [a, b] = grid_coord(inc.vertex.id(), m);
        auto [c, d] = grid_coord(inc.other.id(), m);
        int color = 0;
        if (c == a && d == b + 1)
            color = 1;
        else if (c == a + 1)
            color = 3;
        else if (c == a - 1)
            color = 2;
        else // left-hand edge: the colour the vertical incidence does not use
            color = (a % 2 == b % 2) ? 2 : 3;
        phi.set(inc, color);
    }
    return phi;
}

} // namespace isocover
