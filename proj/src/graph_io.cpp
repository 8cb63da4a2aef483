#include "isocover/graph_io.hpp"

#include <algorithm>
#include <sstream>

namespace isocover {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kMaxOrder = 68719476735ull; // 2^36 - 1

void append_order(std::string& out, std::size_t n) {
    auto put = [&out](std::size_t v) { out.push_back(static_cast<char>(v + 63)); };
    if (n <= 62) {
        put(n);
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            put((n >> shift) & 63);
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            put((n >> shift) & 63);
    }
}

} // namespace

std::string to_graph6(const Graph& g, bool header) {
    const std::size_t n = g.order();
    if (n > kMaxOrder)
        throw InputError("graph too large for graph6");
    std::string out;
    if (header)
        out.append(kHeader);
    append_order(out, n);

    // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int bits = 0;
    unsigned char chunk = 0;
    for (Index j = 1; j < n; ++j)
        for (Index i = 0; i < j; ++i) {
            chunk = static_cast<unsigned char>((chunk << 1) | (g.adjacent(i, j) ? 1 : 0));
            if (++bits == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                bits = 0;
                chunk = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((chunk << (6 - bits)) + 63));
    return out;
}

Graph6Data parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        throw InputError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw InputError("invalid graph6 character");

    std::size_t pos = 0;
    auto take = [&]() -> std::size_t {
        if (pos >= text.size())
            throw InputError("truncated graph6 string");
        return static_cast<std::size_t>(text[pos++] - 63);
    };

    Graph6Data data;
    std::size_t first = take();
    if (first < 63) {
        data.order = first;
    } else {
        int groups = 3;
        if (pos < text.size() && text[pos] == 126) {
            ++pos;
            groups = 6;
        }
        for (int k = 0; k < groups; ++k)
            data.order = (data.order << 6) | take();
    }

    const std::size_t n = data.order;
    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nchars = (nbits + 5) / 6;
    if (text.size() - pos != nchars)
        throw InputError("graph6 length does not match vertex count " + std::to_string(n));

    std::size_t bit = 0;
    for (Index j = 1; j < n; ++j)
        for (Index i = 0; i < j; ++i, ++bit) {
            auto byte = static_cast<unsigned>(text[pos + bit / 6] - 63);
            if ((byte >> (5 - bit % 6)) & 1u)
                data.edges.emplace_back(i, j);
        }
    if (nbits % 6 != 0) {
        auto last = static_cast<unsigned>(text.back() - 63);
        if (last & ((1u << (6 - nbits % 6)) - 1))
            throw InputError("nonzero graph6 padding bits");
    }
    return data;
}

Graph from_graph6(std::string_view text) {
    auto data = parse_graph6(text);
    return graph_from_indices(data.order, data.edges);
}

Graph from_graph6(std::string_view text, const std::vector<VertexLabel>& labels) {
    auto data = parse_graph6(text);
    if (labels.size() != data.order)
        throw InputError("label count " + std::to_string(labels.size()) +
                         " does not match graph6 order " + std::to_string(data.order));
    if (std::adjacent_find(labels.begin(), labels.end(), std::greater_equal<>{}) != labels.end())
        throw InputError("vertex labels must be strictly increasing");
    std::vector<LabelEdge> es;
    es.reserve(data.edges.size());
    for (auto [i, j] : data.edges)
        es.emplace_back(labels[i], labels[j]);
    return Graph(labels, es);
}

std::string to_dot(const Graph& g, const std::function<std::string(const VertexLabel&)>& attributes) {
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& v : g.vertices()) {
        os << "  \"" << v.str() << "\"";
        if (attributes) {
            if (auto extra = attributes(v); !extra.empty())
                os << " [" << extra << "]";
        }
        os << ";\n";
    }
    for (const auto& [u, v] : g.label_edges())
        os << "  \"" << u.str() << "\" -- \"" << v.str() << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace isocover
