#include "isocover/generators.hpp"

#include <string>

#include "isocover/subdivision.hpp"

namespace isocover {

namespace {

void require_positive(int x, const char* what) {
    if (x < 1)
        throw InputError(std::string(what) + " must be positive, got " + std::to_string(x));
}

} // namespace

Graph path(int n) {
    require_positive(n, "path length");
    std::vector<std::pair<Index, Index>> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return graph_from_indices(static_cast<std::size_t>(n), es);
}

Graph cycle(int n) {
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<std::pair<Index, Index>> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return graph_from_indices(static_cast<std::size_t>(n), es);
}

Graph star(int delta) {
    require_positive(delta, "star degree");
    std::vector<std::pair<Index, Index>> es;
    for (int i = 1; i <= delta; ++i)
        es.emplace_back(0, i);
    return graph_from_indices(static_cast<std::size_t>(delta) + 1, es);
}

Graph subdivided_star(int delta) { return subdivide_all(star(delta), 1).graph; }

Graph grid(int n, int m) {
    require_positive(n, "grid rows");
    require_positive(m, "grid columns");
    std::vector<std::pair<Index, Index>> es;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= m; ++b) {
            auto id = static_cast<Index>(grid_id(a, b, m));
            if (b < m)
                es.emplace_back(id, static_cast<Index>(grid_id(a, b + 1, m)));
            if (a < n)
                es.emplace_back(id, static_cast<Index>(grid_id(a + 1, b, m)));
        }
    return graph_from_indices(static_cast<std::size_t>(n) * m, es);
}

Graph wall(int n) {
    require_positive(n, "wall order");
    const int m = 2 * n + 1;
    std::vector<std::pair<Index, Index>> es;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= m; ++b) {
            auto id = static_cast<Index>(grid_id(a, b, m));
            if (b < m)
                es.emplace_back(id, static_cast<Index>(grid_id(a, b + 1, m)));
            if (a < n && a % 2 == b % 2)
                es.emplace_back(id, static_cast<Index>(grid_id(a + 1, b, m)));
        }
    return graph_from_indices(static_cast<std::size_t>(n) * m, es);
}

Graph complete(int k) {
    require_positive(k, "clique size");
    std::vector<std::pair<Index, Index>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            es.emplace_back(i, j);
    return graph_from_indices(static_cast<std::size_t>(k), es);
}

Graph petersen() {
    std::vector<std::pair<Index, Index>> es;
    for (Index i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return graph_from_indices(10, es);
}

} // namespace isocover
